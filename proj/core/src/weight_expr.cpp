#include "ehrkit/weight_expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ehrkit {

namespace {

struct Parser {
  const std::string& src;
  std::size_t d;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos])))
      ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  unsigned long parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return std::stoul(src.substr(start, pos - start));
  }

  WeightExpr parse_expr() {
    WeightExpr sum;
    sum.kind = WeightExpr::Kind::Sum;
    int sign = 1;
    skip_ws();
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    sum.children.push_back(parse_term());
    sum.signs.push_back(sign);
    for (;;) {
      skip_ws();
      if (eat('+'))
        sign = 1;
      else if (eat('-'))
        sign = -1;
      else
        break;
      sum.children.push_back(parse_term());
      sum.signs.push_back(sign);
    }
    if (sum.children.size() == 1 && sum.signs[0] == 1)
      return std::move(sum.children[0]);
    return sum;
  }

  WeightExpr parse_term() {
    WeightExpr prod;
    prod.kind = WeightExpr::Kind::Product;
    prod.children.push_back(parse_factor());
    while (eat('*')) prod.children.push_back(parse_factor());
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  WeightExpr parse_factor() {
    WeightExpr base = parse_base();
    if (eat('^')) {
      WeightExpr pw;
      pw.kind = WeightExpr::Kind::Power;
      pw.exponent = static_cast<unsigned>(parse_uint());
      pw.children.push_back(std::move(base));
      return pw;
    }
    return base;
  }

  WeightExpr parse_base() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      WeightExpr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == 'n') {
      ++pos;
      WeightExpr e;
      e.kind = WeightExpr::Kind::Height;
      return e;
    }
    if (c == 'x') {
      ++pos;
      unsigned long idx = parse_uint();
      if (idx == 0 || idx > d)
        fail("variable x" + std::to_string(idx) + " outside x1..x" + std::to_string(d));
      WeightExpr e;
      e.kind = WeightExpr::Kind::Variable;
      e.var_index = idx - 1;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
        ++pos;
      if (pos < src.size() && src[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
          ++pos;
        if (pos == dstart) fail("expected a denominator");
      }
      WeightExpr e;
      e.kind = WeightExpr::Kind::Literal;
      e.literal = parse_rat(src.substr(start, pos - start));
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

void mono_mul(MultiPoly& out, const MultiPoly& a, const MultiPoly& b) {
  out.clear();
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
}

unsigned total_degree(const std::vector<unsigned>& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

// A multipoly that is homogeneous linear is a linear form; a single constant
// monomial is a scalar.
bool as_scalar(const MultiPoly& p, Rat& out) {
  if (p.empty()) {
    out = 0;
    return true;
  }
  if (p.size() != 1) return false;
  const auto& [e, c] = *p.begin();
  if (total_degree(e) != 0) return false;
  out = c;
  return true;
}

bool as_linform(const MultiPoly& p, std::size_t d, LinForm& out) {
  if (p.empty()) return false;
  out.coeffs.assign(d + 1, Rat(0));
  for (const auto& [e, c] : p) {
    if (total_degree(e) != 1) return false;
    for (std::size_t i = 0; i <= d; ++i)
      if (e[i] == 1) out.coeffs[i] = c;
  }
  return true;
}

void flatten_product(const WeightExpr& e, std::vector<std::pair<const WeightExpr*, unsigned>>& out) {
  if (e.kind == WeightExpr::Kind::Product) {
    for (const WeightExpr& ch : e.children) flatten_product(ch, out);
  } else if (e.kind == WeightExpr::Kind::Power) {
    // (a*b)^k flattens to a^k * b^k; nested powers multiply out
    std::vector<std::pair<const WeightExpr*, unsigned>> inner;
    flatten_product(e.children[0], inner);
    for (auto& [node, exp] : inner) out.push_back({node, exp * e.exponent});
  } else {
    out.push_back({&e, 1});
  }
}

void add_monomial_terms(std::map<unsigned, std::vector<WeightTerm>>& parts,
                        const MultiPoly& poly, std::size_t d, const Rat& scale) {
  for (const auto& [e, c] : poly) {
    WeightTerm t;
    t.scalar = c * scale;
    for (std::size_t i = 0; i <= d; ++i)
      for (unsigned rep = 0; rep < e[i]; ++rep)
        t.factors.push_back(coordinate_form(d, i));
    parts[total_degree(e)].push_back(std::move(t));
  }
}

}  // namespace

WeightExpr parse_weight(const std::string& src, std::size_t ambient_dim) {
  Parser p{src, ambient_dim};
  WeightExpr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return e;
}

namespace {

bool needs_parens_in_product(const WeightExpr& e) {
  return e.kind == WeightExpr::Kind::Sum;
}

void print(const WeightExpr& e, std::ostringstream& out) {
  switch (e.kind) {
    case WeightExpr::Kind::Sum:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i == 0) {
          if (e.signs[i] < 0) out << "-";
        } else {
          out << (e.signs[i] < 0 ? " - " : " + ");
        }
        print(e.children[i], out);
      }
      break;
    case WeightExpr::Kind::Product:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out << "*";
        bool parens = needs_parens_in_product(e.children[i]);
        if (parens) out << "(";
        print(e.children[i], out);
        if (parens) out << ")";
      }
      break;
    case WeightExpr::Kind::Power: {
      const WeightExpr& base = e.children[0];
      bool parens = base.kind == WeightExpr::Kind::Sum ||
                    base.kind == WeightExpr::Kind::Product ||
                    base.kind == WeightExpr::Kind::Power;
      if (parens) out << "(";
      print(base, out);
      if (parens) out << ")";
      out << "^" << e.exponent;
      break;
    }
    case WeightExpr::Kind::Variable:
      out << "x" << (e.var_index + 1);
      break;
    case WeightExpr::Kind::Height:
      out << "n";
      break;
    case WeightExpr::Kind::Literal:
      out << e.literal.get_str();
      break;
  }
}

}  // namespace

std::string to_string(const WeightExpr& e) {
  std::ostringstream out;
  print(e, out);
  return out.str();
}

MultiPoly expand(const WeightExpr& e, std::size_t ambient_dim) {
  const std::size_t nvars = ambient_dim + 1;
  MultiPoly out;
  switch (e.kind) {
    case WeightExpr::Kind::Sum:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        MultiPoly part = expand(e.children[i], ambient_dim);
        for (const auto& [exp, c] : part) {
          out[exp] += e.signs[i] < 0 ? Rat(-c) : c;
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
      break;
    case WeightExpr::Kind::Product: {
      out[std::vector<unsigned>(nvars, 0)] = 1;
      for (const WeightExpr& ch : e.children) {
        MultiPoly rhs = expand(ch, ambient_dim);
        MultiPoly next;
        mono_mul(next, out, rhs);
        out = std::move(next);
      }
      break;
    }
    case WeightExpr::Kind::Power: {
      MultiPoly base = expand(e.children[0], ambient_dim);
      out[std::vector<unsigned>(nvars, 0)] = 1;
      for (unsigned i = 0; i < e.exponent; ++i) {
        MultiPoly next;
        mono_mul(next, out, base);
        out = std::move(next);
      }
      break;
    }
    case WeightExpr::Kind::Variable: {
      std::vector<unsigned> exp(nvars, 0);
      exp[e.var_index] = 1;
      out[exp] = 1;
      break;
    }
    case WeightExpr::Kind::Height: {
      std::vector<unsigned> exp(nvars, 0);
      exp[ambient_dim] = 1;
      out[exp] = 1;
      break;
    }
    case WeightExpr::Kind::Literal:
      if (e.literal != 0) out[std::vector<unsigned>(nvars, 0)] = e.literal;
      break;
  }
  return out;
}

std::vector<std::pair<unsigned, Weight>> homogenize_weight(
    const MultiPoly& p, std::size_t ambient_dim) {
  std::map<unsigned, std::vector<WeightTerm>> parts;
  add_monomial_terms(parts, p, ambient_dim, Rat(1));
  std::vector<std::pair<unsigned, Weight>> out;
  for (auto& [deg, terms] : parts)
    out.push_back({deg, Weight(ambient_dim, deg, std::move(terms))});
  return out;
}

std::vector<std::pair<unsigned, Weight>> weight_parts(const WeightExpr& e,
                                                      std::size_t ambient_dim) {
  // summands of the top-level sum
  std::vector<std::pair<int, const WeightExpr*>> summands;
  if (e.kind == WeightExpr::Kind::Sum) {
    for (std::size_t i = 0; i < e.children.size(); ++i)
      summands.push_back({e.signs[i], &e.children[i]});
  } else {
    summands.push_back({1, &e});
  }

  std::map<unsigned, std::vector<WeightTerm>> parts;
  for (auto [sign_, node] : summands) {
    std::vector<std::pair<const WeightExpr*, unsigned>> factors;
    flatten_product(*node, factors);
    Rat scalar = sign_;
    std::vector<LinForm> forms;
    MultiPoly opaque;  // product of non-linear factors, expanded
    bool have_opaque = false;
    for (auto [fnode, exp] : factors) {
      MultiPoly fp = expand(*fnode, ambient_dim);
      Rat c;
      LinForm lf;
      if (as_scalar(fp, c)) {
        scalar *= rat_pow(c, exp);
      } else if (as_linform(fp, ambient_dim, lf)) {
        for (unsigned i = 0; i < exp; ++i) forms.push_back(lf);
      } else {
        for (unsigned i = 0; i < exp; ++i) {
          if (!have_opaque) {
            opaque = fp;
            have_opaque = true;
          } else {
            MultiPoly next;
            mono_mul(next, opaque, fp);
            opaque = std::move(next);
          }
        }
      }
    }
    if (scalar == 0) continue;
    if (!have_opaque) {
      WeightTerm t;
      t.scalar = scalar;
      t.factors = std::move(forms);
      parts[static_cast<unsigned>(t.factors.size())].push_back(std::move(t));
    } else {
      // distribute: each monomial of the opaque part, times the linear forms
      for (const auto& [exp, c] : opaque) {
        WeightTerm t;
        t.scalar = scalar * c;
        t.factors = forms;
        for (std::size_t i = 0; i <= ambient_dim; ++i)
          for (unsigned rep = 0; rep < exp[i]; ++rep)
            t.factors.push_back(coordinate_form(ambient_dim, i));
        parts[static_cast<unsigned>(t.factors.size())].push_back(std::move(t));
      }
    }
  }

  std::vector<std::pair<unsigned, Weight>> out;
  for (auto& [deg, terms] : parts)
    out.push_back({deg, Weight(ambient_dim, deg, std::move(terms))});
  if (out.empty()) out.push_back({0, Weight(ambient_dim, 0, {})});
  return out;
}

}  // namespace ehrkit
