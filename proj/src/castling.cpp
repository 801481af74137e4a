#include "orbitlab/castling.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <json.hpp>
#include <sstream>

#include "orbitlab/errors.hpp"

namespace orbitlab::castling {

namespace {

class TripletParser {
 public:
  explicit TripletParser(std::string_view text) : text_(text) {}

  std::vector<CoreFactor> core() {
    std::vector<CoreFactor> out;
    out.push_back(factor());
    skip_ws();
    while (peek('*')) {
      ++pos_;
      out.push_back(factor());
      skip_ws();
    }
    return out;
  }

  Triplet triplet() {
    Triplet t;
    t.core = core();
    expect("(x)");
    expect("SL(");
    t.n = integer();
    expect(")");
    expect("|");
    expect("m=");
    t.m = integer();
    skip_ws();
    if (consume("dual")) t.dual = true;
    finish();
    return t;
  }

  void finish() {
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << msg << " at column " << pos_ + 1 << " in \"" << text_ << "\"";
    throw ParseError(os.str(), 1, pos_ + 1);
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  CoreFactor factor() {
    if (consume("SL2:S^")) return CoreFactor::sl2(integer());
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a core factor (SL2:S^k or Label[dim])");
    std::string label(text_.substr(start, pos_ - start));
    expect("[");
    const int dim = integer();
    std::optional<int> group;
    if (consume(";")) group = integer();
    expect("]");
    return CoreFactor::opaque(std::move(label), dim, group);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void validate(const Triplet& t) {
  if (t.core.empty()) throw DomainError("triplet core is empty");
  if (t.n < 1) throw DomainError("SL(n) factor needs n >= 1");
  long product = 1;
  for (const auto& f : t.core) {
    if (f.dimension() < 1) throw DomainError("core factor " + f.literal() + " has no dimension");
    product *= f.dimension();
  }
  if (product != t.m) {
    throw DomainError("core " + t.core_literal() + " has dimension " + std::to_string(product) + ", but m=" +
                      std::to_string(t.m));
  }
}

Triplet normalized(const Triplet& t) {
  Triplet out = t;
  std::sort(out.core.begin(), out.core.end());
  if (std::all_of(out.core.begin(), out.core.end(), [](const CoreFactor& f) { return f.self_dual(); })) {
    out.dual = false;
  }
  return out;
}

}  // namespace

CoreFactor CoreFactor::sl2(int degree) {
  CoreFactor f;
  f.kind = Kind::kSl2;
  f.degree = degree;
  return f;
}

CoreFactor CoreFactor::opaque(std::string label, int rep_dim, std::optional<int> group_dim) {
  CoreFactor f;
  f.kind = Kind::kOpaque;
  f.label = std::move(label);
  f.rep_dim = rep_dim;
  f.group_dim = group_dim;
  return f;
}

std::string CoreFactor::literal() const {
  if (kind == Kind::kSl2) return "SL2:S^" + std::to_string(degree);
  std::string out = label + "[" + std::to_string(rep_dim);
  if (group_dim) out += ";" + std::to_string(*group_dim);
  return out + "]";
}

std::string to_string(LagrangianFlag f) {
  switch (f) {
    case LagrangianFlag::kYes:
      return "yes";
    case LagrangianFlag::kNo:
      return "no";
    case LagrangianFlag::kUnknown:
      break;
  }
  return "unknown";
}

LagrangianFlag parse_flag(std::string_view text) {
  if (text == "yes") return LagrangianFlag::kYes;
  if (text == "no") return LagrangianFlag::kNo;
  if (text == "unknown") return LagrangianFlag::kUnknown;
  throw ParseError("flag must be yes, no or unknown, got \"" + std::string(text) + "\"");
}

std::string Triplet::core_literal() const {
  std::string out;
  for (std::size_t k = 0; k < core.size(); ++k) {
    if (k > 0) out += " * ";
    out += core[k].literal();
  }
  return out;
}

std::string Triplet::literal() const {
  std::string out = core_literal() + " (x) SL(" + std::to_string(n) + ") | m=" + std::to_string(m);
  if (dual) out += " dual";
  return out;
}

std::vector<CoreFactor> parse_core(std::string_view text) {
  TripletParser parser(text);
  auto core = parser.core();
  parser.finish();
  return core;
}

Triplet parse_triplet(std::string_view text) {
  Triplet t = TripletParser(text).triplet();
  validate(t);
  return t;
}

int rep_dim(const Triplet& t) { return t.m * t.n; }

bool castling_applicable(const Triplet& t) { return t.n >= 1 && t.n < t.m; }

Triplet castling_partner(const Triplet& t) {
  validate(t);
  if (!castling_applicable(t)) {
    throw DomainError("castling needs 1 <= n < m, got m=" + std::to_string(t.m) + ", n=" + std::to_string(t.n));
  }
  Triplet out = t;
  out.n = t.m - t.n;
  out.dual = !t.dual;
  out.provenance = t.flag == LagrangianFlag::kUnknown ? "" : "castling-transfer:" + t.literal();
  return out;
}

bool is_reduced(const Triplet& t) {
  if (!castling_applicable(t)) return true;
  const Triplet partner = castling_partner(t);
  if (!equivalent(castling_partner(partner), t)) throw InternalError("castling is not an involution on " + t.literal());
  return rep_dim(partner) >= rep_dim(t);
}

std::string normal_form(const Triplet& t) { return normalized(t).literal(); }

bool equivalent(const Triplet& a, const Triplet& b) { return normal_form(a) == normal_form(b); }

std::optional<int> core_group_dim(const Triplet& t) {
  int total = 0;
  for (const auto& f : t.core) {
    if (f.kind == CoreFactor::Kind::kSl2) {
      total += 3;
    } else if (f.group_dim) {
      total += *f.group_dim;
    } else {
      return std::nullopt;
    }
  }
  return total;
}

int naive_generic_isotropy_dim(const Triplet& t, int core_group_dim) {
  return core_group_dim + (t.n * t.n - 1) + 1 - t.m * t.n;
}

std::vector<Triplet> propagate_lagrangian(std::vector<Triplet> catalog) {
  const std::size_t size = catalog.size();
  std::vector<std::string> forms;
  std::vector<std::optional<std::string>> partner_forms;
  std::deque<std::size_t> queue;
  for (std::size_t k = 0; k < size; ++k) {
    const Triplet& t = catalog[k];
    validate(t);
    if (t.flag != LagrangianFlag::kUnknown) {
      if (t.provenance.empty()) throw DomainError("seed " + t.literal() + " carries a flag without provenance");
      queue.push_back(k);
    }
    forms.push_back(normal_form(t));
    partner_forms.push_back(castling_applicable(t) ? std::optional(normal_form(castling_partner(t))) : std::nullopt);
  }

  auto adjacent = [&](std::size_t a, std::size_t b) {
    return forms[a] == forms[b] || partner_forms[a] == forms[b] || partner_forms[b] == forms[a];
  };

  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < size; ++j) {
      if (j == k || !adjacent(k, j)) continue;
      Triplet& target = catalog[j];
      if (target.flag == LagrangianFlag::kUnknown) {
        target.flag = catalog[k].flag;
        target.provenance = (forms[j] == forms[k] ? "equivalent:" : "castling-transfer:") + catalog[k].literal();
        queue.push_back(j);
      } else if (target.flag != catalog[k].flag) {
        throw DomainError("Lagrangian flag conflict between " + catalog[k].literal() + " (" +
                          to_string(catalog[k].flag) + ") and " + target.literal() + " (" + to_string(target.flag) +
                          ")");
      }
    }
  }
  return catalog;
}

std::vector<Triplet> read_catalog(std::istream& in) {
  std::vector<Triplet> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
    auto where = [&](const std::string& msg, std::size_t col) {
      return ParseError("catalog line " + std::to_string(line_no) + ": " + msg, line_no, col);
    };
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw where(e.what(), e.byte);
    }
    try {
      Triplet t;
      t.core = parse_core(j.at("core").get<std::string>());
      t.m = j.at("m").get<int>();
      t.n = j.at("n").get<int>();
      t.dual = j.value("dual", false);
      t.flag = parse_flag(j.value("flag", std::string("unknown")));
      t.provenance = j.value("provenance", std::string());
      validate(t);
      out.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw where(e.what(), 0);
    } catch (const ParseError& e) {
      throw where(e.what(), e.column());
    } catch (const DomainError& e) {
      throw where(e.what(), 0);
    }
  }
  return out;
}

void write_catalog(std::ostream& out, const std::vector<Triplet>& catalog) {
  for (const auto& t : catalog) {
    nlohmann::json j;
    j["core"] = t.core_literal();
    j["m"] = t.m;
    j["n"] = t.n;
    j["dual"] = t.dual;
    j["flag"] = to_string(t.flag);
    j["provenance"] = t.provenance;
    out << j.dump() << '\n';
  }
}

}  // namespace orbitlab::castling
