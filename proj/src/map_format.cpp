#include "gmm/map_format.hpp"

#include <cctype>
#include <numeric>
#include <set>

#include <json.hpp>

#include "gmm/errors.hpp"

namespace gmm {

namespace {

constexpr int kMaxExponent = 1000;

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& coords)
      : text_(text), coords_(coords) {}

  SparsePolynomial parse() {
    SparsePolynomial out = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("in \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static void add(SparsePolynomial& into, const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = into.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) into.erase(it);
    }
  }

  SparsePolynomial constant(const Rational& c) const {
    SparsePolynomial p;
    add(p, Exponent(coords_.size(), 0), c);
    return p;
  }

  static SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        add(out, e, ca * cb);
      }
    }
    return out;
  }

  SparsePolynomial expression() {
    SparsePolynomial sum = term();
    for (;;) {
      if (accept('+')) {
        for (auto& [e, c] : term()) add(sum, e, c);
      } else if (accept('-')) {
        for (auto& [e, c] : term()) add(sum, e, -c);
      } else {
        return sum;
      }
    }
  }

  SparsePolynomial term() {
    SparsePolynomial product = unary();
    for (;;) {
      if (accept('*')) {
        product = multiply(product, unary());
      } else if (accept('/')) {
        SparsePolynomial divisor = unary();
        const Exponent zero(coords_.size(), 0);
        if (divisor.size() != 1 || divisor.begin()->first != zero)
          fail("division is only allowed by a nonzero constant");
        for (auto& [e, c] : product) c /= divisor.begin()->second;
      } else {
        return product;
      }
    }
  }

  SparsePolynomial unary() {
    if (accept('-')) {
      SparsePolynomial p = unary();
      for (auto& [e, c] : p) c = -c;
      return p;
    }
    if (accept('+')) return unary();
    return power();
  }

  SparsePolynomial power() {
    SparsePolynomial base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer literal");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) fail("exponent too large");
    int k = std::stoi(digits);
    SparsePolynomial out = constant(1);
    for (; k > 0; --k) out = multiply(out, base);
    return out;
  }

  SparsePolynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      SparsePolynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == name) {
          Exponent e(coords_.size(), 0);
          e[i] = 1;
          SparsePolynomial p;
          add(p, e, 1);
          return p;
        }
      }
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& coords_;
  std::size_t pos_ = 0;
};

void check_coords(const std::vector<std::string>& coords) {
  std::set<std::string> seen;
  for (const auto& c : coords) {
    if (c.empty() || !(std::isalpha(static_cast<unsigned char>(c[0])) || c[0] == '_') ||
        !std::all_of(c.begin(), c.end(), [](char ch) {
          return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
        }))
      throw ParseError("invalid coordinate name '" + c + "'");
    if (!seen.insert(c).second) throw ParseError("duplicate coordinate '" + c + "'");
  }
}

std::string render_term(const Exponent& e, const Rational& c,
                        const std::vector<std::string>& coords) {
  Form f(static_cast<int>(e.size()), total_degree(e));
  f.add_term(e, c);
  return render(f, coords);
}

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text,
                                  const std::vector<std::string>& coords) {
  return PolynomialParser(text, coords).parse();
}

HomogeneousLift parse_forms(const std::vector<std::string>& forms,
                            const std::vector<std::string>& coords,
                            int declared_degree) {
  check_coords(coords);
  const int n = static_cast<int>(coords.size());
  if (n < 2) throw ParseError("need at least two coordinates");
  if (static_cast<int>(forms.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " forms, got " +
                     std::to_string(forms.size()));
  if (declared_degree < 0) throw ParseError("negative degree");

  std::vector<SparsePolynomial> parsed;
  std::vector<int> degrees(n, -1);
  for (int i = 0; i < n; ++i) {
    parsed.push_back(parse_polynomial(forms[i], coords));
    const auto& p = parsed.back();
    if (p.empty()) continue;
    // Blame the terms that disagree with the declared degree when some term
    // has it, otherwise those that disagree with the leading term.
    int reference = total_degree(p.begin()->first);
    for (const auto& [e, c] : p)
      if (declared_degree > 0 && total_degree(e) == declared_degree) reference = declared_degree;
    for (const auto& [e, c] : p) {
      if (total_degree(e) != reference)
        throw ParseError("form \"" + forms[i] + "\" is not homogeneous: term \"" +
                         render_term(e, c, coords) + "\" has degree " +
                         std::to_string(total_degree(e)) + ", expected " +
                         std::to_string(reference));
    }
    degrees[i] = total_degree(p.begin()->first);
  }

  int common = -1;
  for (int i = 0; i < n; ++i) {
    if (degrees[i] < 0) continue;
    if (common < 0)
      common = degrees[i];
    else if (degrees[i] != common)
      throw ParseError("degree mismatch " + std::to_string(common) + " vs " +
                       std::to_string(degrees[i]));
  }
  if (common < 0) throw ParseError("all forms are zero");
  if (declared_degree > 0 && common != declared_degree)
    throw ParseError("degree mismatch: declared " + std::to_string(declared_degree) +
                     " vs " + std::to_string(common));
  if (common == 0) throw ParseError("degree 0 maps are not accepted");

  std::vector<Form> out;
  for (const auto& p : parsed) {
    Form f(n, common);
    for (const auto& [e, c] : p) f.add_term(e, c);
    out.push_back(std::move(f));
  }
  return HomogeneousLift(std::move(out));
}

MapDocument read_map_document(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed map file: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("map file must be a JSON object");
    if (!doc.contains("coords") || !doc.contains("forms"))
      throw ParseError("map file needs \"coords\" and \"forms\"");
    auto coords = doc.at("coords").get<std::vector<std::string>>();
    auto forms = doc.at("forms").get<std::vector<std::string>>();
    const int declared_degree = doc.contains("d") ? doc.at("d").get<int>() : 0;
    if (doc.contains("d") && declared_degree < 1)
      throw ParseError("d must be at least 1");
    if (doc.contains("N") && doc.at("N").get<int>() + 1 != static_cast<int>(coords.size()))
      throw ParseError("N does not match the number of coordinates");
    HomogeneousLift lift = parse_forms(forms, coords, declared_degree);
    return {std::move(coords), std::move(lift)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed map file: ") + e.what());
  }
}

HomogeneousLift parse_map(std::string_view text) { return read_map_document(text).lift; }

std::string render_map(const HomogeneousLift& lift, const std::vector<std::string>& coords) {
  nlohmann::ordered_json doc;
  doc["N"] = lift.N();
  doc["d"] = lift.degree();
  doc["coords"] = coords;
  std::vector<std::string> forms;
  for (const auto& f : lift.forms()) forms.push_back(render(f, coords));
  doc["forms"] = forms;
  return doc.dump(2) + "\n";
}

std::string render_map(const HomogeneousLift& lift) {
  return render_map(lift, default_coords(lift.num_vars()));
}

}  // namespace gmm
