#include "snk/certificate.hpp"

#include <sstream>

#include "snk/errors.hpp"
#include "snk/parser.hpp"

namespace snk {

const GbBlock* Certificate::find_gb(const std::string& name) const {
  for (const GbBlock& b : gb_blocks)
    if (b.name == name) return &b;
  return nullptr;
}

const IdentityBlock* Certificate::find_identity(const std::string& name) const {
  for (const IdentityBlock& b : id_blocks)
    if (b.name == name) return &b;
  return nullptr;
}

bool Certificate::has_claim(const std::string& kind,
                            const std::string& block) const {
  return find_claim(kind, block) != nullptr;
}

const Claim* Certificate::find_claim(const std::string& kind,
                                     const std::string& block) const {
  for (const Claim& c : claims)
    if (c.kind == kind && c.block == block) return &c;
  return nullptr;
}

std::string order_spec_string(const std::string& kind,
                              const std::vector<std::string>& elim_names) {
  if (kind != "block") return kind;
  std::string s = "block";
  for (const std::string& v : elim_names) s += " " + v;
  return s;
}

Order order_from_spec(const std::string& spec,
                      const std::vector<std::string>& ring) {
  std::istringstream is(spec);
  std::string kind;
  is >> kind;
  int n = static_cast<int>(ring.size());
  if (kind == "grevlex") return Order::grevlex(n);
  if (kind == "lex") return Order::lex(n);
  if (kind == "block") {
    std::vector<int> elim;
    std::string name;
    while (is >> name) {
      int idx = -1;
      for (int i = 0; i < n; ++i)
        if (ring[i] == name) idx = i;
      if (idx < 0) throw InputError("order spec names unknown variable " + name);
      elim.push_back(idx);
    }
    return Order::block(n, elim);
  }
  throw InputError("unknown order spec '" + spec + "'");
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

void emit_poly_list(std::ostringstream& os, const std::string& key,
                    const std::vector<Polynomial>& ps,
                    const std::vector<std::string>& ring) {
  os << key << ": " << ps.size() << "\n";
  for (const Polynomial& p : ps) os << print_polynomial(p, ring) << "\n";
}

std::string claim_to_line(const Claim& c) {
  std::string s = "claim: " + c.kind + " block={" + c.block + "}";
  for (const auto& [k, v] : c.args) s += " " + k + "={" + v + "}";
  return s;
}

Claim claim_from_line(const std::string& line) {
  Claim c;
  std::istringstream is(line);
  is >> c.kind;
  std::string rest;
  std::getline(is, rest);
  size_t pos = 0;
  while (true) {
    size_t eq = rest.find("={", pos);
    if (eq == std::string::npos) break;
    size_t key_start = rest.rfind(' ', eq);
    key_start = key_start == std::string::npos ? 0 : key_start + 1;
    std::string key = rest.substr(key_start, eq - key_start);
    size_t close = rest.find('}', eq);
    if (close == std::string::npos)
      throw InputError("malformed claim line: " + line);
    std::string value = rest.substr(eq + 2, close - eq - 2);
    if (key == "block")
      c.block = value;
    else
      c.args[key] = value;
    pos = close + 1;
  }
  return c;
}

}  // namespace

std::string emit_certificate(const Certificate& cert) {
  std::ostringstream os;
  os << "snk-certificate " << cert.version << "\n";
  os << "engine: " << cert.engine << "\n";
  os << "task: " << cert.task << "\n";
  os << "verdict: " << cert.verdict << "\n";
  os << "exit: " << cert.exit_code << "\n";
  os << "budget-used: " << cert.budget_used << "\n";
  os << "timestamp: " << cert.timestamp << "\n";
  os << "begin-inputs\n" << cert.inputs;
  if (!cert.inputs.empty() && cert.inputs.back() != '\n') os << "\n";
  os << "end-inputs\n";
  for (const GbBlock& b : cert.gb_blocks) {
    os << "begin-gb " << b.name << "\n";
    os << "ring:";
    for (const std::string& v : b.ring) os << " " << v;
    os << "\n";
    os << "order: " << b.order_spec << "\n";
    emit_poly_list(os, "gens", b.gens, b.ring);
    emit_poly_list(os, "basis", b.basis, b.ring);
    os << "rows: " << b.rows.size() << "\n";
    for (const auto& row : b.rows) {
      for (size_t j = 0; j < row.size(); ++j) {
        if (j) os << " ; ";
        os << print_polynomial(row[j], b.ring);
      }
      os << "\n";
    }
    os << "end-gb\n";
  }
  for (const IdentityBlock& b : cert.id_blocks) {
    os << "begin-identity " << b.name << "\n";
    os << "ring:";
    for (const std::string& v : b.ring) os << " " << v;
    os << "\n";
    os << "target: " << print_polynomial(b.target, b.ring) << "\n";
    emit_poly_list(os, "gens", b.gens, b.ring);
    emit_poly_list(os, "cofactors", b.cofactors, b.ring);
    os << "end-identity\n";
  }
  for (const Claim& c : cert.claims) os << claim_to_line(c) << "\n";
  for (const std::string& r : cert.results) os << "result: " << r << "\n";
  for (const std::string& n : cert.notes) os << "note: " << n << "\n";
  os << "end-certificate\n";
  return os.str();
}

Certificate parse_certificate(const std::string& text) {
  Certificate cert;
  std::istringstream is(text);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  size_t i = 0;
  auto need = [&](const std::string& what) -> std::string {
    if (i >= lines.size())
      throw InputError("certificate truncated while reading " + what);
    return lines[i++];
  };
  auto header_value = [&](const std::string& line, const std::string& key) {
    if (line.rfind(key + ":", 0) != 0)
      throw InputError("expected '" + key + ":' in certificate header");
    return trim(line.substr(key.size() + 1));
  };

  std::string magic = need("magic");
  if (magic.rfind("snk-certificate ", 0) != 0)
    throw InputError("not a certificate file");
  cert.version = trim(magic.substr(16));
  cert.engine = header_value(need("engine"), "engine");
  cert.task = header_value(need("task"), "task");
  cert.verdict = header_value(need("verdict"), "verdict");
  cert.exit_code = std::stoi(header_value(need("exit"), "exit"));
  cert.budget_used = std::stol(header_value(need("budget-used"), "budget-used"));
  cert.timestamp = header_value(need("timestamp"), "timestamp");
  if (trim(need("begin-inputs")) != "begin-inputs")
    throw InputError("expected begin-inputs");
  std::ostringstream inp;
  while (true) {
    std::string l = need("inputs");
    if (trim(l) == "end-inputs") break;
    inp << l << "\n";
  }
  cert.inputs = inp.str();

  auto read_count = [&](const std::string& line, const std::string& key) {
    if (line.rfind(key + ":", 0) != 0)
      throw InputError("expected '" + key + ": N' in certificate block");
    return std::stoul(trim(line.substr(key.size() + 1)));
  };

  while (i < lines.size()) {
    std::string l = trim(need("section"));
    if (l.empty()) continue;
    if (l == "end-certificate") break;
    if (l.rfind("begin-gb ", 0) == 0) {
      GbBlock b;
      b.name = trim(l.substr(9));
      std::string ringline = need("ring");
      if (ringline.rfind("ring:", 0) != 0) throw InputError("expected ring:");
      {
        std::istringstream rs(ringline.substr(5));
        std::string v;
        while (rs >> v) b.ring.push_back(v);
      }
      b.order_spec = header_value(need("order"), "order");
      size_t ng = read_count(need("gens"), "gens");
      for (size_t k = 0; k < ng; ++k)
        b.gens.push_back(parse_polynomial(need("gen"), b.ring));
      size_t nb = read_count(need("basis"), "basis");
      for (size_t k = 0; k < nb; ++k)
        b.basis.push_back(parse_polynomial(need("basis elt"), b.ring));
      size_t nr = read_count(need("rows"), "rows");
      for (size_t k = 0; k < nr; ++k) {
        std::string rowline = need("row");
        std::vector<Polynomial> row;
        size_t pos = 0;
        while (true) {
          size_t sep = rowline.find(" ; ", pos);
          std::string piece = sep == std::string::npos
                                  ? rowline.substr(pos)
                                  : rowline.substr(pos, sep - pos);
          row.push_back(parse_polynomial(trim(piece), b.ring));
          if (sep == std::string::npos) break;
          pos = sep + 3;
        }
        b.rows.push_back(std::move(row));
      }
      if (trim(need("end-gb")) != "end-gb") throw InputError("expected end-gb");
      cert.gb_blocks.push_back(std::move(b));
    } else if (l.rfind("begin-identity ", 0) == 0) {
      IdentityBlock b;
      b.name = trim(l.substr(15));
      std::string ringline = need("ring");
      if (ringline.rfind("ring:", 0) != 0) throw InputError("expected ring:");
      {
        std::istringstream rs(ringline.substr(5));
        std::string v;
        while (rs >> v) b.ring.push_back(v);
      }
      b.target = parse_polynomial(header_value(need("target"), "target"), b.ring);
      size_t ng = read_count(need("gens"), "gens");
      for (size_t k = 0; k < ng; ++k)
        b.gens.push_back(parse_polynomial(need("gen"), b.ring));
      size_t nc = read_count(need("cofactors"), "cofactors");
      for (size_t k = 0; k < nc; ++k)
        b.cofactors.push_back(parse_polynomial(need("cofactor"), b.ring));
      if (trim(need("end-identity")) != "end-identity")
        throw InputError("expected end-identity");
      cert.id_blocks.push_back(std::move(b));
    } else if (l.rfind("claim: ", 0) == 0) {
      cert.claims.push_back(claim_from_line(trim(l.substr(7))));
    } else if (l.rfind("result: ", 0) == 0) {
      cert.results.push_back(l.substr(8));
    } else if (l.rfind("note: ", 0) == 0) {
      cert.notes.push_back(l.substr(6));
    } else {
      throw InputError("unexpected certificate line: " + l);
    }
  }
  return cert;
}

}  // namespace snk
