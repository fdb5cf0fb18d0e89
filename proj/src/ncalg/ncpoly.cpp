#include "ncdoc/ncalg/ncpoly.hpp"

#include <atomic>
#include <cctype>

namespace ncdoc::ncalg {

namespace {

std::atomic<int> g_degree_cap{12};

void check_cap(std::size_t degree) {
  const int cap = g_degree_cap.load(std::memory_order_relaxed);
  if (degree > static_cast<std::size_t>(cap)) throw DegreeCapExceeded(degree, cap);
}

}  // namespace

DegreeCapExceeded::DegreeCapExceeded(std::size_t degree, int cap)
    : std::runtime_error("degree cap exceeded: word of length " + std::to_string(degree) +
                         " > cap " + std::to_string(cap)),
      degree(degree),
      cap(cap) {}

int degree_cap() { return g_degree_cap.load(); }

void set_degree_cap(int cap) {
  if (cap < 1) throw std::invalid_argument("degree cap must be positive");
  g_degree_cap.store(cap);
}

NCPoly::NCPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Word{}, constant);
}

NCPoly::NCPoly(Generator g) { terms_.emplace(Word{g}, Rational(1)); }

NCPoly NCPoly::word(Word w, const Rational& coefficient) {
  check_cap(w.size());
  NCPoly p;
  if (coefficient != 0) p.terms_.emplace(std::move(w), coefficient);
  return p;
}

NCPoly NCPoly::gen(std::string_view name, std::vector<int> indices, int dot_order) {
  return NCPoly(Generator::make(name, std::move(indices), dot_order));
}

std::size_t NCPoly::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Generator> NCPoly::generators() const {
  std::set<Generator> out;
  for (const auto& [w, c] : terms_) out.insert(w.begin(), w.end());
  return out;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void NCPoly::add_term(Word&& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& other) {
  *this = *this * other;
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& [w, c] : terms_) c *= scalar;
  }
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  Word w;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      check_cap(wa.size() + wb.size());
      w.clear();
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly operator-(NCPoly a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly jacobi_sum(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
  return commutator(commutator(a, b), c) + commutator(commutator(c, a), b) +
         commutator(commutator(b, c), a);
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += w[i].to_string();
  }
  return out;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += ncdoc::to_string(Rational(abs(c)));
    if (!w.empty()) {
      out += " * ";
      out += word_to_string(w);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  NCPoly parse() {
    NCPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [w, c] = parse_term();
      result.add_term(std::move(w), sign * c);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  std::pair<Word, Rational> parse_term() {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Rational c = parse_coefficient();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        return {parse_word(), c};
      }
      return {Word{}, c};
    }
    return {parse_word(), Rational(1)};
  }

  Rational parse_coefficient() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Word parse_word() {
    Word w;
    w.push_back(parse_generator());
    while (peek() == '.') {
      ++pos_;
      w.push_back(parse_generator());
    }
    return w;
  }

  Generator parse_generator() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (!is_identifier(name)) {
      pos_ = start;
      fail("expected generator name");
    }
    std::vector<int> indices;
    if (peek() == '[') {
      ++pos_;
      indices.push_back(parse_int());
      while (peek() == ',') {
        ++pos_;
        indices.push_back(parse_int());
      }
      expect(']');
    }
    int dot = 0;
    if (peek() == '^') {
      ++pos_;
      expect('(');
      dot = parse_int();
      expect(')');
    }
    try {
      return Generator::make(name, std::move(indices), dot);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  int parse_int() {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("NCPoly parse error at column " + std::to_string(pos_ + 1) + ": " +
                                what + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly NCPoly::parse(std::string_view text) { return Parser(text).parse(); }

CheckResult symbolic_result(std::string name, std::string anchor, const NCPoly& residual,
                            std::string notes, std::size_t max_terms) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.notes = std::move(notes);
  r.residual_size = residual.size();
  r.status = residual.is_zero() ? Status::pass : Status::fail;
  for (const auto& [w, c] : residual.terms()) {
    if (r.residual_terms.size() >= max_terms) break;
    r.residual_terms.push_back(NCPoly::word(w, c).to_string());
  }
  return r;
}

CheckResult symbolic_result_multi(std::string name, std::string anchor,
                                  const std::vector<std::pair<std::string, NCPoly>>& parts,
                                  std::string notes, std::size_t max_terms) {
  CheckResult r;
  r.name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.status = Status::pass;
  std::size_t failing = 0;
  for (const auto& [label, residual] : parts) {
    if (residual.is_zero()) continue;
    r.status = Status::fail;
    ++failing;
    r.residual_size += residual.size();
    for (const auto& [w, c] : residual.terms()) {
      if (r.residual_terms.size() >= max_terms) break;
      r.residual_terms.push_back(label + ": " + NCPoly::word(w, c).to_string());
    }
  }
  std::string summary = std::to_string(parts.size()) + (parts.size() == 1 ? " case" : " cases");
  if (failing) summary += ", " + std::to_string(failing) + " nonzero";
  r.notes = notes.empty() ? summary : notes + "; " + summary;
  return r;
}

}  // namespace ncdoc::ncalg
