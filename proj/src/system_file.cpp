#include <contextlab/system_file.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace contextlab {

namespace {

constexpr std::string_view kHeader = "contextlab-system";
constexpr std::string_view kVersion = "1";

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

// "<keyword> ID : ITEM ITEM..." ; returns the items after the colon.
std::vector<std::string> declaration(const Line& line, std::size_t min_items, const char* what) {
  const auto& t = line.tokens;
  if (t.size() < 2) throw ParseError(line.number, t[0].column, std::string("expected ") + what + " id");
  if (t.size() < 3 || t[2].text != ":")
    throw ParseError(line.number, t.size() < 3 ? t[1].column + t[1].text.size() : t[2].column,
                     "expected ':' after " + std::string(what) + " id");
  if (t.size() - 3 < min_items)
    throw ParseError(line.number, t.back().column + t.back().text.size(),
                     std::string(what) + " needs at least " + std::to_string(min_items) + " entries after ':'");
  std::vector<std::string> items;
  for (std::size_t i = 3; i < t.size(); ++i) items.push_back(t[i].text);
  return items;
}

}  // namespace

System parse_system(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty system file");

  const auto& header = lines.front();
  if (header.tokens[0].text != kHeader)
    throw ParseError(header.number, header.tokens[0].column, "expected header 'contextlab-system 1'");
  if (header.tokens.size() != 2 || header.tokens[1].text != kVersion)
    throw ParseError(header.number, header.tokens.size() > 1 ? header.tokens[1].column : header.tokens[0].column,
                     "unsupported format version");

  std::vector<Content> contents;
  std::vector<Context> contexts;
  std::vector<BunchTable> bunches;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto& keyword = line.tokens[0];
    if (keyword.text == "content") {
      contents.push_back({line.tokens.size() > 1 ? line.tokens[1].text : "", declaration(line, 2, "content")});
    } else if (keyword.text == "context") {
      contexts.push_back({line.tokens.size() > 1 ? line.tokens[1].text : "", declaration(line, 1, "context")});
    } else if (keyword.text == "bunch") {
      BunchTable bunch{line.tokens.size() > 1 ? line.tokens[1].text : "", declaration(line, 1, "bunch"), {}};
      bool closed = false;
      while (++li < lines.size()) {
        const auto& entry = lines[li];
        if (entry.tokens.size() == 1 && entry.tokens[0].text == "end") {
          closed = true;
          break;
        }
        const auto& t = entry.tokens;
        std::size_t eq = 0;
        while (eq < t.size() && t[eq].text != "=") ++eq;
        if (eq == t.size())
          throw ParseError(entry.number, t.back().column + t.back().text.size(), "expected '=' in bunch entry");
        if (eq == 0) throw ParseError(entry.number, t[0].column, "bunch entry has no outcome values");
        if (eq + 2 != t.size())
          throw ParseError(entry.number, eq + 1 < t.size() ? t[eq + 1].column : t[eq].column + 1,
                           "expected exactly one probability after '='");
        std::vector<std::string> outcome;
        for (std::size_t i = 0; i < eq; ++i) outcome.push_back(t[i].text);
        Rational p;
        try {
          p = parse_rational(t[eq + 1].text);
        } catch (const Error& e) {
          throw ParseError(entry.number, t[eq + 1].column, e.detail());
        }
        bunch.entries.emplace_back(std::move(outcome), std::move(p));
      }
      if (!closed) throw ParseError(line.number, keyword.column, "bunch '" + bunch.context + "' is missing 'end'");
      bunches.push_back(std::move(bunch));
    } else {
      throw ParseError(line.number, keyword.column, "unknown directive '" + keyword.text + "'");
    }
  }
  return build_system(std::move(contents), std::move(contexts), std::move(bunches));
}

System load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::string format_system(const System& system) {
  std::ostringstream out;
  out << kHeader << ' ' << kVersion << "\n\n";
  for (const auto& c : system.contents()) {
    out << "content " << c.id << " :";
    for (const auto& v : c.values) out << ' ' << v;
    out << '\n';
  }
  out << '\n';
  for (const auto& ctx : system.contexts()) {
    out << "context " << ctx.id << " :";
    for (const auto& q : ctx.members) out << ' ' << q;
    out << '\n';
  }
  for (const auto& bunch : system.bunches()) {
    out << "\nbunch " << bunch.context << " :";
    for (const auto& v : bunch.joint.variables()) out << ' ' << v.content;
    out << '\n';
    for (const auto& [outcome, p] : bunch.joint.support()) {
      out << ' ';
      for (std::size_t i = 0; i < outcome.size(); ++i)
        out << ' ' << system.label(bunch.joint.variables()[i].content, outcome[i]);
      out << " = " << to_string(p) << '\n';
    }
    out << "end\n";
  }
  return out.str();
}

void save_system(const System& system, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
  out << format_system(system);
  if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

}  // namespace contextlab
