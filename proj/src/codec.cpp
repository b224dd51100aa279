#include "rnametric/codec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rnametric/error.hpp"

namespace rnametric {

const std::array<std::pair<char, char>, kNumBracketFamilies>& bracket_families() {
  static const auto families = [] {
    std::array<std::pair<char, char>, kNumBracketFamilies> f{};
    f[0] = {'(', ')'};
    f[1] = {'[', ']'};
    f[2] = {'{', '}'};
    f[3] = {'<', '>'};
    for (std::size_t k = 0; k < 26; ++k) {
      f[4 + k] = {static_cast<char>('A' + k), static_cast<char>('a' + k)};
    }
    return f;
  }();
  return families;
}

namespace {

constexpr std::string_view kSpace = " \t\r\v\f";

std::string_view trim(std::string_view s) {
  auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(kSpace, pos);
    if (pos == std::string_view::npos) break;
    auto end = line.find_first_of(kSpace, pos);
    if (end == std::string_view::npos) end = line.size();
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool parse_int(std::string_view field, Index& out) {
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

bool is_comment(std::string_view line) {
  auto t = trim(line);
  return !t.empty() && t.front() == '#';
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

[[noreturn]] void syntax_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + msg, line);
}

// Re-throws structure validation errors with the line they came from.
template <typename F>
SecondaryStructure with_line(std::size_t line, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.line() != 0) throw;
    throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what(), line);
  }
}

}  // namespace

SecondaryStructure parse_pairlist(std::string_view text, std::size_t first_line) {
  auto lines = split_lines(text);
  std::optional<Index> length;
  std::size_t header_line = first_line;
  std::vector<std::pair<Index, Index>> pairs;
  std::vector<std::size_t> pair_lines;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const std::size_t lineno = first_line + k;
    if (is_blank(lines[k]) || is_comment(lines[k])) continue;
    auto fields = split_fields(lines[k]);
    if (!length) {
      Index n = 0;
      if (fields.size() != 2 || fields[0] != "n" || !parse_int(fields[1], n)) {
        syntax_error(lineno, "expected header \"n <length>\"");
      }
      if (n < 1) syntax_error(lineno, "length must be positive");
      length = n;
      header_line = lineno;
      continue;
    }
    Index a = 0, b = 0;
    if (fields.size() != 2 || !parse_int(fields[0], a) || !parse_int(fields[1], b)) {
      syntax_error(lineno, "expected contact \"<i> <j>\"");
    }
    pairs.emplace_back(a, b);
    pair_lines.push_back(lineno);
  }
  if (!length) syntax_error(first_line, "missing header \"n <length>\"");

  try {
    return SecondaryStructure(*length, pairs);
  } catch (const Error& e) {
    // Failure is monotone in the prefix of contact lines, so bisect for the
    // shortest failing prefix and blame its last line.
    std::size_t lo = 0, hi = pairs.size();
    if (hi == 0) throw Error(e.kind(), "line " + std::to_string(header_line) + ": " + e.what(), header_line);
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      try {
        SecondaryStructure(*length, std::span(pairs.data(), mid));
        lo = mid;
      } catch (const Error&) {
        hi = mid;
      }
    }
    try {
      SecondaryStructure(*length, std::span(pairs.data(), hi));
    } catch (const Error& inner) {
      const auto lineno = pair_lines[hi - 1];
      throw Error(inner.kind(), "line " + std::to_string(lineno) + ": " + inner.what(), lineno);
    }
    throw;
  }
}

std::string emit_pairlist(const SecondaryStructure& s) {
  std::string out = "n " + std::to_string(s.length()) + "\n";
  for (const auto& c : s.contacts()) {
    out += std::to_string(c.i);
    out += ' ';
    out += std::to_string(c.j);
    out += '\n';
  }
  return out;
}

SecondaryStructure parse_dotbracket(std::string_view text, std::size_t line) {
  auto body = trim(text);
  while (!body.empty() && body.back() == '\n') body = trim(body.substr(0, body.size() - 1));
  if (body.empty()) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": empty dot-bracket string",
                line);
  }
  // opener_of[c] = family + 1 for open characters, closer_of likewise.
  std::array<int, 256> opener_of{}, closer_of{};
  const auto& fam = bracket_families();
  for (std::size_t f = 0; f < fam.size(); ++f) {
    opener_of[static_cast<unsigned char>(fam[f].first)] = static_cast<int>(f) + 1;
    closer_of[static_cast<unsigned char>(fam[f].second)] = static_cast<int>(f) + 1;
  }

  std::array<std::vector<Index>, kNumBracketFamilies> stacks;
  std::vector<std::pair<Index, Index>> pairs;
  for (std::size_t k = 0; k < body.size(); ++k) {
    const auto ch = static_cast<unsigned char>(body[k]);
    const Index pos = static_cast<Index>(k) + 1;
    if (ch == '.') continue;
    if (int f = opener_of[ch]; f != 0) {
      stacks[static_cast<std::size_t>(f - 1)].push_back(pos);
    } else if (int f = closer_of[ch]; f != 0) {
      auto& st = stacks[static_cast<std::size_t>(f - 1)];
      if (st.empty()) {
        throw Error(ErrorKind::UnbalancedBracket,
                    "line " + std::to_string(line) + ": unmatched '" + std::string(1, body[k]) +
                        "' at position " + std::to_string(pos),
                    line);
      }
      pairs.emplace_back(st.back(), pos);
      st.pop_back();
    } else {
      throw Error(ErrorKind::UnknownCharacter,
                  "line " + std::to_string(line) + ": unexpected character '" +
                      std::string(1, body[k]) + "' at position " + std::to_string(pos),
                  line);
    }
  }
  for (std::size_t f = 0; f < stacks.size(); ++f) {
    if (!stacks[f].empty()) {
      throw Error(ErrorKind::UnbalancedBracket,
                  "line " + std::to_string(line) + ": unclosed '" + std::string(1, fam[f].first) +
                      "' at position " + std::to_string(stacks[f].back()),
                  line);
    }
  }
  return with_line(line, [&] { return SecondaryStructure(static_cast<Index>(body.size()), pairs); });
}

std::string emit_dotbracket(const SecondaryStructure& s) {
  std::string out(static_cast<std::size_t>(s.length()), '.');
  std::vector<std::vector<Contact>> assigned;
  const auto& fam = bracket_families();
  for (const auto& c : s.contacts()) {
    std::size_t f = 0;
    for (; f < assigned.size(); ++f) {
      bool clash = false;
      for (const auto& other : assigned[f]) {
        if (c.crosses(other)) {
          clash = true;
          break;
        }
      }
      if (!clash) break;
    }
    if (f == assigned.size()) {
      if (f == kNumBracketFamilies) {
        throw Error(ErrorKind::TooManyFamilies,
                    "structure needs more than " + std::to_string(kNumBracketFamilies) +
                        " bracket families");
      }
      assigned.emplace_back();
    }
    assigned[f].push_back(c);
    out[static_cast<std::size_t>(c.i - 1)] = fam[f].first;
    out[static_cast<std::size_t>(c.j - 1)] = fam[f].second;
  }
  return out;
}

Format detect_format(std::string_view text) {
  for (auto line : split_lines(text)) {
    auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    return t.starts_with("n ") || t.starts_with("n\t") ? Format::PairList : Format::DotBracket;
  }
  return Format::DotBracket;
}

std::vector<RecordText> split_records(std::string_view text, Format format) {
  std::vector<RecordText> records;
  auto lines = split_lines(text);
  if (format == Format::DotBracket) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (is_blank(lines[k]) || is_comment(lines[k])) continue;
      records.push_back({records.size() + 1, k + 1, std::string(trim(lines[k]))});
    }
    return records;
  }
  std::size_t k = 0;
  while (k < lines.size()) {
    while (k < lines.size() && is_blank(lines[k])) ++k;
    if (k == lines.size()) break;
    const std::size_t start = k;
    bool has_content = false;
    std::string block;
    for (; k < lines.size() && !is_blank(lines[k]); ++k) {
      has_content = has_content || !is_comment(lines[k]);
      block.append(lines[k]);
      block.push_back('\n');
    }
    if (has_content) records.push_back({records.size() + 1, start + 1, std::move(block)});
  }
  return records;
}

SecondaryStructure parse_record(const RecordText& record, Format format) {
  return format == Format::PairList ? parse_pairlist(record.text, record.first_line)
                                    : parse_dotbracket(record.text, record.first_line);
}

std::vector<SecondaryStructure> parse_records(std::string_view text) {
  const auto format = detect_format(text);
  std::vector<SecondaryStructure> out;
  for (const auto& rec : split_records(text, format)) out.push_back(parse_record(rec, format));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "error reading '" + path + "'");
  return buf.str();
}

}  // namespace rnametric
