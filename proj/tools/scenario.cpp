#include "scenario.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "erg/pad.hpp"

namespace erg::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto p = s.find(sep);
    out.push_back(trim(s.substr(0, p)));
    if (p == std::string_view::npos) break;
    s.remove_prefix(p + 1);
  }
  return out;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Subject make_subject(std::string_view id, std::size_t line) {
  if (!Subject::is_valid_id(id)) {
    throw ScenarioError("invalid subject id '" + std::string(id) + "'", line);
  }
  return Subject(std::string(id));
}

struct PendingInfluence {
  Subject subject;
  std::string value;
  std::size_t line;
};

}  // namespace

Alternative parse_state(std::string_view text, int width) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    Alternative a = Alternative::parse(text);
    if (a.width() != width) {
      throw Error("state " + std::string(text) + " has width " + std::to_string(a.width()) +
                  ", expected " + std::to_string(width));
    }
    return a;
  }
  if (width != 3) throw Error("emotion names need width 3; use a brace code");
  return pad::encode(pad::from_name(text));
}

PolynomialExpr Scenario::group() const {
  if (polynomial) return *polynomial;
  return graph_to_polynomial(*graph);
}

Assignment Scenario::concrete_influences() const {
  Assignment out;
  for (const auto& [s, v] : influences) {
    if (v) out.emplace(s, *v);
  }
  return out;
}

bool Scenario::is_symbolic(const Subject& s) const {
  auto it = influences.find(s);
  return it == influences.end() || !it->second;
}

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  std::optional<std::size_t> subjects_line;
  std::optional<std::size_t> polynomial_line;
  std::optional<std::size_t> relation_line;
  std::optional<std::size_t> width_line;
  std::string polynomial_text;
  std::vector<RelationshipGraph::Edge> edges;
  std::vector<PendingInfluence> pending;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ScenarioError("expected 'key: value'", lineno);
    const auto key_words = words(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (key_words.empty()) throw ScenarioError("missing key before ':'", lineno);
    const std::string_view key = key_words.front();

    if (key == "subjects" && key_words.size() == 1) {
      if (subjects_line) throw ScenarioError("duplicate 'subjects' line", lineno);
      subjects_line = lineno;
      std::set<Subject> seen;
      for (auto w : words(value)) {
        Subject s = make_subject(w, lineno);
        if (!seen.insert(s).second) throw ScenarioError("duplicate subject '" + s.id() + "'", lineno);
        sc.subjects.push_back(std::move(s));
      }
      if (sc.subjects.empty()) throw ScenarioError("no subjects listed", lineno);
    } else if (key == "relation" && key_words.size() == 2) {
      Relation r;
      if (key_words[1] == "alliance") {
        r = Relation::Alliance;
      } else if (key_words[1] == "conflict") {
        r = Relation::Conflict;
      } else {
        throw ScenarioError("unknown relation '" + std::string(key_words[1]) + "'", lineno);
      }
      relation_line = relation_line.value_or(lineno);
      for (auto pair : split(value, ',')) {
        if (pair.empty()) continue;
        const auto dash = pair.find('-');
        if (dash == std::string_view::npos) {
          throw ScenarioError("expected pair 'x-y' but found '" + std::string(pair) + "'", lineno);
        }
        edges.push_back({make_subject(trim(pair.substr(0, dash)), lineno),
                         make_subject(trim(pair.substr(dash + 1)), lineno), r});
      }
    } else if (key == "polynomial" && key_words.size() == 1) {
      if (polynomial_line) throw ScenarioError("duplicate 'polynomial' line", lineno);
      polynomial_line = lineno;
      polynomial_text = std::string(value);
    } else if (key == "influence" && key_words.size() == 2) {
      pending.push_back({make_subject(key_words[1], lineno), std::string(value), lineno});
    } else if (key == "width" && key_words.size() == 1) {
      if (width_line) throw ScenarioError("duplicate 'width' line", lineno);
      width_line = lineno;
      int w = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), w);
      if (ec != std::errc() || ptr != value.data() + value.size() || w < 1 || w > kMaxWidth) {
        throw ScenarioError("invalid width '" + std::string(value) + "'", lineno);
      }
      sc.width = w;
    } else {
      throw ScenarioError("unknown directive '" + std::string(trim(line.substr(0, colon))) + "'",
                          lineno);
    }
  }

  if (polynomial_line && relation_line) {
    throw ScenarioError("'polynomial' and 'relation' lines are mutually exclusive",
                        std::max(*polynomial_line, *relation_line));
  }
  if (polynomial_line) {
    try {
      sc.polynomial = sc.subjects.empty() ? parse_polynomial(polynomial_text)
                                          : parse_polynomial(polynomial_text, sc.subjects);
    } catch (const Error& e) {
      throw ScenarioError(std::string("polynomial: ") + e.what(), *polynomial_line);
    }
    if (sc.subjects.empty()) {
      sc.subjects = sc.polynomial->subjects();
    } else {
      std::vector<Subject> declared = sc.subjects;
      std::sort(declared.begin(), declared.end());
      if (declared != sc.polynomial->subjects()) {
        throw ScenarioError("polynomial subjects differ from the 'subjects' line", *polynomial_line);
      }
    }
  } else {
    if (!subjects_line) throw ScenarioError("missing 'subjects' line", 0);
    try {
      sc.graph.emplace(sc.subjects, edges);
    } catch (const Error& e) {
      throw ScenarioError(e.what(), relation_line.value_or(*subjects_line));
    }
  }

  for (const auto& p : pending) {
    if (std::find(sc.subjects.begin(), sc.subjects.end(), p.subject) == sc.subjects.end()) {
      throw ScenarioError("influence for unknown subject '" + p.subject.id() + "'", p.line);
    }
    if (sc.influences.count(p.subject)) {
      throw ScenarioError("duplicate influence for '" + p.subject.id() + "'", p.line);
    }
    std::optional<Alternative> v;
    if (p.value != "?") {
      try {
        v = parse_state(p.value, sc.width);
      } catch (const Error& e) {
        throw ScenarioError(e.what(), p.line);
      }
    }
    sc.influences.emplace(p.subject, v);
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot read scenario file '" + path.string() + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace erg::cli
