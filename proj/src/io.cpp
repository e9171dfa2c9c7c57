#include "actkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "actkit/error.hpp"

namespace actkit {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-blank lines with comments removed.
class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::string_view raw = text.substr(pos, end - pos);
      if (auto hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      Line line{number, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        const std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
      }
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      last_line_ = number;
      pos = end + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }
  const Line& peek() const { return lines_[next_]; }
  const Line& take() {
    if (done()) throw ParseError(last_line_ + 1, 1, "unexpected end of input");
    return lines_[next_++];
  }
  void expect_end() const {
    if (!done())
      throw ParseError(peek().number, peek().tokens.front().column,
                       "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

std::size_t parse_number(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line.number, tok.column,
                     "expected a non-negative integer, got '" +
                         std::string(tok.text) + "'");
  return value;
}

void expect_keyword(const Line& line, std::size_t i, std::string_view word) {
  if (line.tokens.size() <= i || line.tokens[i].text != word)
    throw ParseError(line.number,
                     i < line.tokens.size() ? line.tokens[i].column : 1,
                     "expected '" + std::string(word) + "'");
}

std::vector<Index> read_rows(LineReader& in, std::size_t rows,
                             std::size_t columns, std::size_t bound) {
  std::vector<Index> out;
  out.reserve(rows * columns);
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = in.take();
    if (line.tokens.size() != columns)
      throw ParseError(line.number,
                       line.tokens.size() > columns
                           ? line.tokens[columns].column
                           : line.tokens.back().column,
                       "expected " + std::to_string(columns) + " entries, got " +
                           std::to_string(line.tokens.size()));
    for (const Token& tok : line.tokens) {
      const std::size_t v = parse_number(line, tok);
      if (v >= bound)
        throw ParseError(line.number, tok.column,
                         "entry " + std::to_string(v) + " out of range [0, " +
                             std::to_string(bound) + ")");
      out.push_back(static_cast<Index>(v));
    }
  }
  return out;
}

Semigroup read_semigroup_block(LineReader& in) {
  const Line& header = in.take();
  expect_keyword(header, 0, "semigroup");
  if (header.tokens.size() != 2)
    throw ParseError(header.number, header.tokens.front().column,
                     "expected 'semigroup <n>'");
  const std::size_t n = parse_number(header, header.tokens[1]);
  if (n == 0 || n > kMaxMaskedSize)
    throw ParseError(header.number, header.tokens[1].column,
                     "semigroup order must be in [1, 64]");
  std::vector<Index> table = read_rows(in, n, n, n);
  std::optional<Index> identity;
  if (!in.done() && in.peek().tokens.front().text == "identity") {
    const Line& line = in.take();
    if (line.tokens.size() != 2)
      throw ParseError(line.number, line.tokens.front().column,
                       "expected 'identity <k>'");
    const std::size_t k = parse_number(line, line.tokens[1]);
    if (k >= n)
      throw ParseError(line.number, line.tokens[1].column,
                       "identity out of range");
    identity = static_cast<Index>(k);
  }
  return Semigroup(n, std::move(table), identity);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

std::vector<Index> json_rows(const Json& rows, std::size_t expected_rows,
                             std::optional<std::size_t>& columns,
                             const char* what) {
  if (!rows.is_array() || rows.size() != expected_rows)
    throw ParseError(1, 1, std::string(what) + " must be an array of " +
                               std::to_string(expected_rows) + " rows");
  std::vector<Index> out;
  for (const Json& row : rows) {
    if (!row.is_array()) throw ParseError(1, 1, std::string(what) + " row is not an array");
    if (!columns) columns = row.size();
    if (row.size() != *columns)
      throw ParseError(1, 1, std::string(what) + " rows have unequal length");
    for (const Json& v : row) {
      if (!v.is_number_unsigned())
        throw ParseError(1, 1, std::string(what) + " entries must be non-negative integers");
      out.push_back(v.get<Index>());
    }
  }
  return out;
}

Semigroup semigroup_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("table"))
    throw ParseError(1, 1, "missing semigroup.table");
  const Json& table = j.at("table");
  if (!table.is_array() || table.empty())
    throw ParseError(1, 1, "semigroup.table must be a non-empty array");
  std::optional<std::size_t> columns;
  std::vector<Index> flat = json_rows(table, table.size(), columns, "semigroup.table");
  std::optional<Index> identity;
  if (j.contains("identity") && !j.at("identity").is_null())
    identity = j.at("identity").get<Index>();
  return Semigroup(table.size(), std::move(flat), identity);
}

}  // namespace

Semigroup parse_semigroup(std::string_view text) {
  LineReader in(text);
  Semigroup s = read_semigroup_block(in);
  in.expect_end();
  return s;
}

Act parse_act(std::string_view text, const std::filesystem::path& base_dir) {
  LineReader in(text);
  const Line& header = in.take();
  expect_keyword(header, 0, "act");
  if (header.tokens.size() != 4)
    throw ParseError(header.number, header.tokens.front().column,
                     "expected 'act <m> over <file|inline>'");
  const std::size_t m = parse_number(header, header.tokens[1]);
  if (m == 0) throw ParseError(header.number, header.tokens[1].column, "act order must be positive");
  expect_keyword(header, 2, "over");
  const std::string_view source = header.tokens[3].text;

  SemigroupPtr s;
  if (source == "inline") {
    s = std::make_shared<const Semigroup>(read_semigroup_block(in));
  } else {
    std::filesystem::path path(source);
    if (path.is_relative()) path = base_dir / path;
    try {
      s = std::make_shared<const Semigroup>(read_semigroup(path));
    } catch (const ParseError& e) {
      throw ParseError(header.number, header.tokens[3].column,
                       path.string() + ": " + e.what());
    } catch (const Error& e) {
      throw ParseError(header.number, header.tokens[3].column, e.what());
    }
  }
  std::vector<Index> action = read_rows(in, m, s->size(), m);
  in.expect_end();
  return Act(std::move(s), m, std::move(action));
}

std::string format_semigroup(const Semigroup& s) {
  std::ostringstream out;
  const std::size_t n = s.size();
  out << "semigroup " << n << '\n';
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) out << (y ? " " : "") << s(x, y);
    out << '\n';
  }
  if (s.identity()) out << "identity " << *s.identity() << '\n';
  return out.str();
}

std::string format_act(const Act& a) {
  std::ostringstream out;
  out << "act " << a.size() << " over inline\n" << format_semigroup(a.semigroup());
  const std::size_t n = a.semigroup().size();
  for (Index x = 0; x < a.size(); ++x) {
    for (Index s = 0; s < n; ++s) out << (s ? " " : "") << a(x, s);
    out << '\n';
  }
  return out.str();
}

Document parse_document(std::string_view text,
                        const std::filesystem::path& base_dir) {
  if (looks_like_json(text)) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      // nlohmann reports a byte offset; turn it into line/column.
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError(line, column, "invalid JSON");
    }
    return document_from_json(j);
  }
  LineReader probe(text);
  if (probe.done()) throw ParseError(1, 1, "empty input");
  const Line& first = probe.peek();
  if (first.tokens.front().text == "semigroup") return parse_semigroup(text);
  if (first.tokens.front().text == "act") return parse_act(text, base_dir);
  throw ParseError(first.number, first.tokens.front().column,
                   "expected 'semigroup' or 'act'");
}

Document read_document(const std::filesystem::path& path) {
  return parse_document(slurp(path), path.parent_path());
}

Semigroup read_semigroup(const std::filesystem::path& path) {
  Document d = read_document(path);
  if (auto* s = std::get_if<Semigroup>(&d)) return std::move(*s);
  throw ParseError(1, 1, path.string() + " holds an act, not a semigroup");
}

Act read_act(const std::filesystem::path& path) {
  Document d = read_document(path);
  if (auto* a = std::get_if<Act>(&d)) return std::move(*a);
  throw ParseError(1, 1, path.string() + " holds a semigroup, not an act");
}

Json table_json(std::span<const Index> flat, std::size_t columns) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < flat.size(); i += columns)
    rows.push_back(std::vector<Index>(flat.begin() + i, flat.begin() + i + columns));
  return rows;
}

Json to_json(const Semigroup& s) {
  Json j{{"table", table_json(s.table(), s.size())}};
  if (s.identity()) j["identity"] = *s.identity();
  return Json{{"semigroup", j}};
}

Json to_json(const Act& a) {
  Json j = to_json(a.semigroup());
  j["act"] = Json{{"action", table_json(a.action(), a.semigroup().size())}};
  return j;
}

Document document_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("semigroup"))
      throw ParseError(1, 1, "missing 'semigroup' object");
    Semigroup s = semigroup_from_json(j.at("semigroup"));
    if (!j.contains("act")) return s;
    const Json& act = j.at("act");
    if (!act.is_object() || !act.contains("action"))
      throw ParseError(1, 1, "missing act.action");
    const Json& rows = act.at("action");
    if (!rows.is_array() || rows.empty())
      throw ParseError(1, 1, "act.action must be a non-empty array");
    std::optional<std::size_t> columns = s.size();
    std::vector<Index> flat = json_rows(rows, rows.size(), columns, "act.action");
    return Act(std::make_shared<const Semigroup>(std::move(s)), rows.size(),
               std::move(flat));
  } catch (const Json::exception& e) {
    throw ParseError(1, 1, e.what());
  }
}

std::string format_congruence(const Congruence& rho) {
  std::string out;
  for (Index v : rho.labels()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Congruence parse_congruence(std::string_view text) {
  LineReader in(text);
  const Line& line = in.take();
  in.expect_end();
  std::vector<Index> labels;
  for (const Token& tok : line.tokens)
    labels.push_back(static_cast<Index>(parse_number(line, tok)));
  return Congruence(labels);
}

Json to_json(ElementSet set) {
  return Json(set.to_vector());
}

Json to_json(const Congruence& rho) {
  return Json{{"blocks", std::vector<Index>(rho.labels().begin(), rho.labels().end())}};
}

Json to_json(const ActHom& f) {
  return Json(f.image);
}

}  // namespace actkit
