#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rnametric/structure.hpp"

namespace rnametric {

/// Bracket families for dot-bracket text, in assignment order:
/// "()", "[]", "{}", "<>", then "Aa" .. "Zz".
inline constexpr std::size_t kNumBracketFamilies = 30;
const std::array<std::pair<char, char>, kNumBracketFamilies>& bracket_families();

/// Pair-list text. The first non-comment line is "n <length>", each further
/// nonempty line is "<i> <j>". Lines starting with '#' are ignored.
/// `first_line` offsets line numbers in error messages.
SecondaryStructure parse_pairlist(std::string_view text, std::size_t first_line = 1);
std::string emit_pairlist(const SecondaryStructure& s);

/// One line of '.' and bracket characters; each family is matched with its
/// own stack, so different families may cross.
SecondaryStructure parse_dotbracket(std::string_view text, std::size_t line = 1);
/// Greedy first-fit family assignment in order of left endpoint.
std::string emit_dotbracket(const SecondaryStructure& s);

enum class Format { PairList, DotBracket };

/// Raw text of one record inside a multi-structure file.
struct RecordText {
  std::size_t index = 0;       // 1-based record number
  std::size_t first_line = 0;  // 1-based line where the record starts
  std::string text;
};

/// Pair-list when the first nonblank, non-comment line starts with "n ",
/// dot-bracket otherwise.
Format detect_format(std::string_view text);

/// Splits a file into records: blank-line separated pair-list blocks, or one
/// dot-bracket line per record. Comment-only blocks are dropped.
std::vector<RecordText> split_records(std::string_view text, Format format);

SecondaryStructure parse_record(const RecordText& record, Format format);

/// Parses every record, throwing on the first invalid one.
std::vector<SecondaryStructure> parse_records(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace rnametric
