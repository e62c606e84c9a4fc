#include "chroma/poly.hpp"

#include "chroma/error.hpp"

#include <algorithm>
#include <cctype>

namespace chroma {

std::string render_variable(const VarDescriptor& var) {
  if (const auto* h = std::get_if<HostVertexVar>(&var)) return "x" + std::to_string(h->id);
  const auto& s = std::get<SubsetVar>(var).elements;
  if (s.size() == 1) return "x" + std::to_string(s.front());
  std::string out = "x{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + '}';
}

int VarRegistry::add(VarDescriptor var) {
  if (index_.contains(var))
    throw Error(Errc::registry_error, "duplicate variable " + render_variable(var));
  const int idx = static_cast<int>(vars_.size());
  index_.emplace(var, idx);
  vars_.push_back(std::move(var));
  return idx;
}

std::optional<int> VarRegistry::find(const VarDescriptor& var) const {
  auto it = index_.find(var);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int VarRegistry::index_of(const VarDescriptor& var) const {
  if (auto idx = find(var)) return *idx;
  throw Error(Errc::registry_error, "variable " + render_variable(var) + " is not registered");
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [var, exp] : factors) {
    if (exp < 0 || var < 0) throw Error(Errc::invalid_argument, "negative exponent or index");
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var)
      factors_.back().second += exp;
    else
      factors_.emplace_back(var, exp);
  }
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(int var) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
  return it != factors_.end() && it->first == var ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    while (it != other.factors_.end() && it->first < var) ++it;
    if (it == other.factors_.end() || it->first != var || it->second < exp) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool GradedLexFirst::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
    // The smaller variable index present only on one side means that side
    // has the larger exponent at the first differing coordinate.
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

Poly::Poly(Registry registry) : registry_(std::move(registry)) {
  if (!registry_) throw Error(Errc::registry_error, "polynomial needs a registry");
}

Poly Poly::variable(Registry registry, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= registry->size())
    throw Error(Errc::registry_error, "variable index out of range");
  Poly p(std::move(registry));
  p.terms_.emplace(Monomial({{index, 1}}), BigInt(1));
  return p;
}

Poly Poly::constant(Registry registry, const BigInt& value) {
  Poly p(std::move(registry));
  p.add_term(Monomial(), value);
  return p;
}

BigInt Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly::add_term(const Monomial& m, const BigInt& coef) {
  if (coef == 0) return;
  for (const auto& [var, exp] : m.factors())
    if (static_cast<std::size_t>(var) >= registry_->size())
      throw Error(Errc::registry_error, "monomial uses an unregistered variable");
  auto [it, inserted] = terms_.try_emplace(m, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::require_compatible(const Poly& other) const {
  if (registry_ != other.registry_ && !(*registry_ == *other.registry_))
    throw Error(Errc::incompatible_registry, "polynomials use different variable registries");
}

Poly& Poly::operator+=(const Poly& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator*(const Poly& a, const Poly& b) {
  a.require_compatible(b);
  Poly out(a.registry_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.registry_ != b.registry_ && !(*a.registry_ == *b.registry_)) return false;
  return a.terms_ == b.terms_;
}

BigInt Poly::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) total += c;
  return total;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly scale(const Poly& p, const BigInt& c) {
  Poly out(p.registry());
  if (c == 0) return out;
  for (const auto& [m, coef] : p.terms()) out.add_term(m, coef * c);
  return out;
}

BigInt gamma_extract(const Poly& p, const Monomial& target) {
  BigInt total = 0;
  for (const auto& [m, c] : p.terms())
    if (m.divides(target)) total += c;
  return total;
}

Poly permute_variables(const Poly& p, std::span<const int> sigma) {
  const std::size_t n = p.registry()->size();
  if (sigma.size() != n)
    throw Error(Errc::invalid_permutation, "permutation length does not match registry");
  std::vector<char> seen(n, 0);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || seen[s])
      throw Error(Errc::invalid_permutation, "not a bijection on registry indices");
    seen[s] = 1;
  }
  Poly out(p.registry());
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> moved;
    moved.reserve(m.factors().size());
    for (const auto& [var, exp] : m.factors()) moved.emplace_back(sigma[var], exp);
    out.add_term(Monomial(std::move(moved)), c);
  }
  return out;
}

namespace {

constexpr std::string_view kDot = "\xC2\xB7";  // U+00B7 MIDDLE DOT

}  // namespace

std::string to_text(const Monomial& m, const VarRegistry& registry) {
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    if (!out.empty()) out += kDot;
    out += registry.name(var);
    if (exp != 1) out += '^' + std::to_string(exp);
  }
  return out;
}

std::string to_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string vars = to_text(m, *p.registry());
    if (vars.empty()) {
      out += magnitude.str();
    } else {
      if (magnitude != 1) {
        out += magnitude.str();
        out += kDot;
      }
      out += vars;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarRegistry& registry) : text_(text) {
    for (std::size_t i = 0; i < registry.size(); ++i) names_.emplace(registry.name(static_cast<int>(i)), static_cast<int>(i));
  }

  void parse_into(Poly& out) {
    skip_space();
    if (text_.substr(pos_) == "0") return;
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) {
        if (first) fail("empty polynomial text");
        return;
      }
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      parse_term(out, negative);
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse_error, what + " at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  bool eat_dot() {
    if (text_.substr(pos_, kDot.size()) == kDot) {
      pos_ += kDot.size();
      return true;
    }
    if (peek() == '*') {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    const auto start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void parse_term(Poly& out, bool negative) {
    BigInt coef = 1;
    std::vector<Monomial::Factor> factors;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = BigInt(digits());
      if (!eat_dot()) {
        out.add_term(Monomial(), negative ? BigInt(-coef) : coef);
        return;
      }
    }
    do {
      if (peek() != 'x') fail("expected a variable");
      const auto start = pos_++;
      if (peek() == '{') {
        while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
        if (peek() != '}') fail("unterminated variable subset");
        ++pos_;
      } else {
        digits();
      }
      auto it = names_.find(std::string(text_.substr(start, pos_ - start)));
      if (it == names_.end()) fail("unknown variable");
      int exp = 1;
      if (peek() == '^') {
        ++pos_;
        exp = std::stoi(digits());
      }
      factors.emplace_back(it->second, exp);
    } while (eat_dot());
    out.add_term(Monomial(std::move(factors)), negative ? BigInt(-coef) : coef);
  }

  std::string_view text_;
  std::map<std::string, int> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Registry registry) {
  Poly out(registry);
  PolyParser(text, *registry).parse_into(out);
  return out;
}

nlohmann::json to_json(const Poly& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    auto vars = nlohmann::json::array();
    for (const auto& [var, exp] : m.factors()) vars.push_back({var, exp});
    terms.push_back({{"coef", c.str()}, {"vars", vars}});
  }
  return {{"terms", terms}};
}

Poly poly_from_json(const nlohmann::json& j, Registry registry) {
  Poly out(registry);
  try {
    for (const auto& t : j.at("terms")) {
      std::vector<Monomial::Factor> factors;
      for (const auto& f : t.at("vars")) factors.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
      out.add_term(Monomial(std::move(factors)), BigInt(t.at("coef").get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed polynomial JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(Errc::parse_error, std::string("malformed coefficient: ") + e.what());
  }
  return out;
}

}  // namespace chroma
