#include "snk/problem.hpp"

#include <sstream>

#include "snk/errors.hpp"
#include "snk/parser.hpp"

namespace snk {

const std::vector<std::string> kKnownTasks = {
    "gb",          "member",        "radical-member", "eliminate",
    "saturate",    "regulous-check", "subintegral-check", "swan-check",
    "swan-scan",   "conductor",     "seminormalize",  "nullstellensatz"};

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

struct LineReader {
  std::vector<std::string> lines;
  size_t i = 0;
  explicit LineReader(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
  }
  bool done() const { return i >= lines.size(); }
  std::string peek() const { return lines[i]; }
  std::string take() { return lines[i++]; }
  std::string where() const { return "line " + std::to_string(i + 1); }
};

}  // namespace

Fraction parse_fraction(const std::string& text,
                        const std::vector<std::string>& vars) {
  // Split on " / "; rational literals never contain spaces, so the fraction
  // separator is unambiguous.
  size_t pos = text.find(" / ");
  if (pos == std::string::npos)
    return {parse_polynomial(text, vars),
            Polynomial::one(static_cast<int>(vars.size()))};
  std::string ptext = trim(text.substr(0, pos));
  std::string qtext = trim(text.substr(pos + 3));
  if (qtext.find(" / ") != std::string::npos)
    throw InputError("fraction has more than one ' / ' separator: " + text);
  return {parse_polynomial(ptext, vars), parse_polynomial(qtext, vars)};
}

std::string print_fraction(const Fraction& f,
                           const std::vector<std::string>& vars) {
  return print_polynomial(f.p, vars) + " / " + print_polynomial(f.q, vars);
}

ProblemFile parse_problem(const std::string& text) {
  ProblemFile p;
  LineReader r(text);
  bool saw_task = false, saw_vars = false;

  // Pending block contents are parsed once vars are known; in practice the
  // canonical order puts task/vars first and we require that.
  auto need_vars = [&](const std::string& key) {
    if (!saw_vars)
      throw InputError(r.where() + ": '" + key +
                       "' must come after the vars declaration");
  };

  auto read_block = [&]() {
    std::vector<std::string> body;
    while (true) {
      if (r.done()) throw InputError("unterminated block (missing 'end')");
      std::string line = trim(r.take());
      if (line == "end") break;
      if (line.empty() || line[0] == '#') continue;
      body.push_back(line);
    }
    return body;
  };

  auto parse_polys = [&](const std::vector<std::string>& body,
                         const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    for (const std::string& line : body) out.push_back(parse_polynomial(line, vars));
    return out;
  };

  while (!r.done()) {
    std::string raw = r.take();
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw InputError(r.where() + ": expected 'key: value', got \"" + line +
                       "\"");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));

    if (key == "task") {
      bool known = false;
      for (const std::string& t : kKnownTasks)
        if (t == value) known = true;
      if (!known) throw InputError(r.where() + ": unknown task '" + value + "'");
      p.task = value;
      saw_task = true;
    } else if (key == "vars") {
      p.vars = split_ws(value);
      if (p.vars.empty()) throw InputError(r.where() + ": empty vars");
      saw_vars = true;
    } else if (key == "adjoined") {
      need_vars(key);
      p.adjoined = split_ws(value);
    } else if (key == "ideal") {
      need_vars(key);
      if (!value.empty()) throw InputError(r.where() + ": ideal is a block");
      p.ideal = parse_polys(read_block(), p.vars);
    } else if (key == "components") {
      need_vars(key);
      for (const std::string& line2 : read_block()) {
        std::vector<Polynomial> comp;
        std::string rest = line2;
        size_t pos;
        while ((pos = rest.find(';')) != std::string::npos) {
          comp.push_back(parse_polynomial(trim(rest.substr(0, pos)), p.vars));
          rest = rest.substr(pos + 1);
        }
        comp.push_back(parse_polynomial(trim(rest), p.vars));
        p.components.push_back(std::move(comp));
      }
    } else if (key == "relations") {
      need_vars(key);
      p.relations = parse_polys(read_block(), p.all_vars());
    } else if (key == "graph") {
      need_vars(key);
      p.graph = parse_polys(read_block(), p.all_vars());
    } else if (key == "fraction") {
      need_vars(key);
      p.fraction = parse_fraction(value, p.vars);
    } else if (key == "candidates") {
      need_vars(key);
      for (const std::string& line2 : read_block())
        p.candidates.push_back(parse_fraction(line2, p.vars));
    } else if (key == "member") {
      need_vars(key);
      p.member = parse_polynomial(value, p.vars);
    } else if (key == "eliminate") {
      need_vars(key);
      p.eliminate_vars = split_ws(value);
    } else if (key == "saturate-by") {
      need_vars(key);
      p.saturate_by = parse_polynomial(value, p.vars);
    } else if (key == "swan-p") {
      need_vars(key);
      p.swan_p = parse_polynomial(value, p.vars);
    } else if (key == "swan-q") {
      need_vars(key);
      p.swan_q = parse_polynomial(value, p.vars);
    } else if (key == "degree-bound") {
      p.degree_bound = std::stoi(value);
    } else if (key == "coefficients") {
      for (const std::string& w : split_ws(value)) {
        size_t slash = w.find('/');
        if (slash == std::string::npos)
          p.coefficients.push_back(
              Rational::from_decimal_string(w));
        else
          p.coefficients.push_back(Rational(mpq_class(w)));
      }
    } else if (key == "target") {
      need_vars(key);
      p.target = parse_polynomial(value, p.all_vars());
    } else if (key == "gens") {
      need_vars(key);
      p.gens = parse_polys(read_block(), p.all_vars());
    } else if (key == "bound") {
      p.bound = std::stoi(value);
    } else if (key == "degree") {
      p.conductor_degree = std::stoi(value);
    } else {
      throw InputError(r.where() + ": unknown key '" + key + "'");
    }
  }

  if (!saw_task) throw InputError("missing 'task:' header");
  if (!saw_vars) throw InputError("missing 'vars:' header");
  return p;
}

std::string emit_problem(const ProblemFile& p) {
  std::ostringstream os;
  auto vars = p.vars;
  auto all = p.all_vars();
  os << "task: " << p.task << "\n";
  os << "vars:";
  for (const auto& v : p.vars) os << " " << v;
  os << "\n";
  if (!p.adjoined.empty()) {
    os << "adjoined:";
    for (const auto& v : p.adjoined) os << " " << v;
    os << "\n";
  }
  os << "ideal:\n";
  for (const auto& g : p.ideal) os << print_polynomial(g, vars) << "\n";
  os << "end\n";
  if (!p.components.empty()) {
    os << "components:\n";
    for (const auto& comp : p.components) {
      for (size_t i = 0; i < comp.size(); ++i) {
        if (i) os << " ; ";
        os << print_polynomial(comp[i], vars);
      }
      os << "\n";
    }
    os << "end\n";
  }
  if (!p.relations.empty()) {
    os << "relations:\n";
    for (const auto& g : p.relations) os << print_polynomial(g, all) << "\n";
    os << "end\n";
  }
  if (!p.graph.empty()) {
    os << "graph:\n";
    for (const auto& g : p.graph) os << print_polynomial(g, all) << "\n";
    os << "end\n";
  }
  if (p.fraction) os << "fraction: " << print_fraction(*p.fraction, vars) << "\n";
  if (!p.candidates.empty()) {
    os << "candidates:\n";
    for (const auto& c : p.candidates) os << print_fraction(c, vars) << "\n";
    os << "end\n";
  }
  if (p.member) os << "member: " << print_polynomial(*p.member, vars) << "\n";
  if (!p.eliminate_vars.empty()) {
    os << "eliminate:";
    for (const auto& v : p.eliminate_vars) os << " " << v;
    os << "\n";
  }
  if (p.saturate_by)
    os << "saturate-by: " << print_polynomial(*p.saturate_by, vars) << "\n";
  if (p.swan_p) os << "swan-p: " << print_polynomial(*p.swan_p, vars) << "\n";
  if (p.swan_q) os << "swan-q: " << print_polynomial(*p.swan_q, vars) << "\n";
  if (p.degree_bound) os << "degree-bound: " << *p.degree_bound << "\n";
  if (!p.coefficients.empty()) {
    os << "coefficients:";
    for (const auto& c : p.coefficients) os << " " << c.str();
    os << "\n";
  }
  if (p.target) os << "target: " << print_polynomial(*p.target, all) << "\n";
  if (!p.gens.empty()) {
    os << "gens:\n";
    for (const auto& g : p.gens) os << print_polynomial(g, all) << "\n";
    os << "end\n";
  }
  if (p.bound) os << "bound: " << *p.bound << "\n";
  if (p.conductor_degree) os << "degree: " << *p.conductor_degree << "\n";
  return os.str();
}

}  // namespace snk
