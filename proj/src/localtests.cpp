// SPDX-License-Identifier: Apache-2.0
#include "qts/localtests.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "qts/dyadic.hpp"

namespace qts {

namespace {

constexpr int kMaxPrecision = 4096;

template <class F>
auto with_escalation(int k0, F f) {
  for (int k = std::max(k0, 4);; k *= 2) {
    try {
      return f(k);
    } catch (const PrecisionError&) {
      if (k > kMaxPrecision) throw;
    }
  }
}

bool divides(const Int& p, const Int& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

std::string str(const Int& n) { return n.get_str(); }
std::string str(int n) { return std::to_string(n); }

// (-1, x) over Q_p for a nonzero rational.
int symbol_rational(const Int& p, const Rat& x) {
  if (p == 2) return dyadic::minus_one_symbol_Q2(x);
  if (mod(p, 4) == 1) return 1;
  int v = valuation(p, x);
  return v % 2 ? -1 : 1;
}

Place finite_place(const Int& p, std::string label, SplittingType t) {
  Place pl;
  pl.kind = Place::Kind::Finite;
  pl.p = p;
  pl.label = std::move(label);
  pl.type = t;
  return pl;
}

std::vector<std::string> labels_for(SplitTag t) {
  switch (t) {
    case SplitTag::SS: return {"P11", "P12", "P21", "P22"};
    case SplitTag::SI:
    case SplitTag::SR: return {"P1", "P2"};
    default: return {"P"};
  }
}

Int rational_norm_integer(const QuartElement& M) {
  Rat n = norm_K_over_Q(M);
  if (n.get_den() != 1) throw std::logic_error("norm of an integral element is not an integer");
  return n.get_num();
}

// One prime of k above a split p, with the data needed for the places of K above it.
struct SplitSide {
  PAdicInt c, alpha, X, Y;
  bool square = false;
  std::optional<PAdicInt> t;
};

SplitSide split_side(const FieldParams& params, const QuartElement& M, const Int& p, int sign, int k) {
  PAdicInt c = split_root(params, p, k);
  if (sign < 0) c = -c;
  PAdicInt alpha = PAdicInt(p, k, params.A) * (PAdicInt(p, k, params.D) + PAdicInt(p, k, params.B) * c);
  int v = alpha.valuation();
  PAdicInt u = alpha.shift_down(v);
  SplitSide s{c, alpha, evaluate(M.X(), c), evaluate(M.Y(), c), false, std::nullopt};
  if (v % 2 == 0) {
    if (p == 2) {
      if (u.precision() < 4) throw PrecisionError("need the unit part of alpha mod 16");
      s.square = mod(u.residue(), 8) == 1;
      if (s.square) {
        PAdicInt r = sqrt_2adic(u.residue(), u.precision() - 1);
        s.t = PAdicInt(2, r.precision() + v / 2, r.residue() * pow_int(2, v / 2));
      }
    } else {
      s.square = jacobi(u.residue(), p) == 1;
      if (s.square) {
        auto r = sqrt_mod_prime_power(u.residue(), p, u.precision());
        s.t = PAdicInt(p, r->precision() + v / 2, r->residue() * pow_int(p, static_cast<unsigned long>(v / 2)));
      }
    }
  }
  return s;
}

std::string rule_name(const Int& p, SplitTag t) {
  if (p == 2) {
    switch (t) {
      case SplitTag::SS: return "dyadic-split";
      case SplitTag::SI: return "dyadic-unramified";
      case SplitTag::SR: return "dyadic-ramified";
      default: return "single-dyadic";
    }
  }
  if (mod(p, 4) == 1) return "i-in-Qp";
  switch (t) {
    case SplitTag::SS: return "split-valuation-parity";
    case SplitTag::SR: return "ramified-valuation-parity";
    case SplitTag::RR: return "rr-coordinates";
    default: return "even-residue-degree";
  }
}

int local_precision(const Int& p, const FieldParams& params, const Int& norm) {
  int v = norm == 0 ? 0 : valuation(p, norm);
  Int dc = params.D * params.C * params.C;
  return default_precision() + v + valuation(p, dc) + 4;
}

}  // namespace

std::string kind_name(Place::Kind k) { return k == Place::Kind::Infinite ? "infinite" : "finite"; }

bool Place::operator<(const Place& o) const {
  if (kind != o.kind) return kind == Kind::Finite;
  if (p != o.p) return p < o.p;
  return label < o.label;
}

int minus_one_symbol_Qp(const PAdicInt& x) {
  const Int& p = x.prime();
  if (p == 2) return dyadic::minus_one_symbol_Q2(x);
  int v = x.valuation();
  if (mod(p, 4) == 1) return 1;
  return v % 2 ? -1 : 1;
}

QuartElement integral_square_multiple(const QuartElement& m) {
  Int L = 1;
  for (const auto& c : m.coords()) {
    Int d = c.get_den();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), d.get_mpz_t());
  }
  return m.scaled(Rat(L * L));
}

std::vector<SymbolCertificate> place_symbols(const FieldParams& params, const QuartElement& m, const Int& p) {
  if (m.is_zero()) throw std::invalid_argument("symbols of zero");
  if (!is_prime(p)) throw std::invalid_argument("place_symbols needs a prime");
  QuartElement M = integral_square_multiple(m);
  SplittingType type = classify(params, p);
  Int norm = rational_norm_integer(M);
  std::vector<SymbolCertificate> out;
  std::string rule = rule_name(p, type.tag);

  if (p != 2 && mod(p, 4) == 1) {
    for (auto& l : labels_for(type.tag))
      out.push_back({finite_place(p, l, type), 1, rule, {{"reason", "-1 is a square in Q_p"}}});
    return out;
  }
  bool split_in_k = p == 2 ? mod(params.D, 8) == 1 : (!divides(p, params.D) && jacobi(params.D, p) == 1);
  if (!split_in_k) {
    // a single place of local degree 4: the local norm is N_{K/Q}(m)
    int value = symbol_rational(p, Rat(norm));
    CertData d = {{"local_degree", "4"}, {"norm_valuation", str(valuation(p, norm))}};
    if (p == 2) d.push_back({"norm_odd_part_mod4", str(mod(Int(norm / pow_int(2, valuation(2, norm))), 4))});
    out.push_back({finite_place(p, "P", type), value, rule, d});
    return out;
  }
  int k0 = local_precision(p, params, norm);
  for (int sign : {1, -1}) {
    std::string i = sign > 0 ? "1" : "2";
    auto certs = with_escalation(k0, [&](int k) {
      std::vector<SymbolCertificate> cs;
      SplitSide s = split_side(params, M, p, sign, k);
      bool expect_square = type.tag == SplitTag::SS;
      if (s.square != expect_square) throw std::logic_error("splitting type disagrees with the local radicand");
      CertData base = {{"sqrtD", str(s.c.residue())}, {"precision", str(s.c.precision())}};
      if (s.square) {
        for (int ts : {1, -1}) {
          PAdicInt t = ts > 0 ? *s.t : -*s.t;
          PAdicInt value = s.X + s.Y * t;
          int sym = minus_one_symbol_Qp(value);
          CertData d = base;
          d.push_back({"theta", str(t.residue())});
          d.push_back({"local_degree", "1"});
          d.push_back({"valuation", str(value.valuation())});
          if (p == 2) d.push_back({"odd_part_mod4", str(mod(value.shift_down(value.valuation()).residue(), 4))});
          cs.push_back({finite_place(p, "P" + i + (ts > 0 ? "1" : "2"), type), sym, rule, d});
        }
      } else {
        PAdicInt n = s.X * s.X - s.Y * s.Y * s.alpha;
        int sym = minus_one_symbol_Qp(n);
        CertData d = base;
        d.push_back({"local_degree", "2"});
        d.push_back({"relative_norm_valuation", str(n.valuation())});
        if (p == 2) d.push_back({"odd_part_mod4", str(mod(n.shift_down(n.valuation()).residue(), 4))});
        cs.push_back({finite_place(p, "P" + i, type), sym, rule, d});
      }
      return cs;
    });
    out.insert(out.end(), certs.begin(), certs.end());
  }
  return out;
}

std::vector<SymbolCertificate> symbol_infinite(const FieldParams& params, const QuartElement& m) {
  if (m.is_zero()) throw std::invalid_argument("symbols of zero");
  std::vector<SymbolCertificate> out;
  auto signs = embedding_signs(params, m);
  SplittingType none;
  if (!signs) {
    for (int j = 0; j < 2; ++j) {
      Place pl{Place::Kind::Infinite, 0, "cx" + std::to_string(j), none};
      out.push_back({pl, 1, "complex-place", {}});
    }
    return out;
  }
  for (int j = 0; j < 4; ++j) {
    Place pl{Place::Kind::Infinite, 0, "inf" + std::to_string(j), none};
    int s = (*signs)[j];
    out.push_back({pl, s > 0 ? 1 : -1, "real-sign", {{"sign", s > 0 ? "+" : "-"}}});
  }
  return out;
}

std::vector<SymbolCertificate> all_symbols(const FieldParams& params, const QuartElement& m) {
  QuartElement M = integral_square_multiple(m);
  Int norm = rational_norm_integer(M);
  std::vector<SymbolCertificate> out = symbol_infinite(params, M);
  std::vector<Int> primes = {2};
  for (const auto& f : factorize(norm).factors)
    if (f.prime != 2) primes.push_back(f.prime);
  for (const Int& p : primes) {
    auto c = place_symbols(params, M, p);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
  return out;
}

int symbol_product(const std::vector<SymbolCertificate>& certs) {
  int r = 1;
  for (const auto& c : certs) r *= c.value;
  return r;
}

// ---------------------------------------------------------------- case rules

int rr_coordinate_rule(const QuartElement& m, const Int& p) {
  auto div = [&](const Rat& r) { return r.get_den() == 1 && divides(p, r.get_num()); };
  return div(m.x1()) && div(m.y1()) && !div(m.x2()) ? 1 : -1;
}

namespace {

RulePrediction all_plus_prediction(size_t places, std::string rule, CertData data) {
  RulePrediction r;
  r.per_place.assign(places, 1);
  r.all_plus = true;
  r.rule = std::move(rule);
  r.data = std::move(data);
  return r;
}

bool divisible_element(const QuartElement& x, const Int& p) {
  for (const auto& c : x.coords())
    if (divides(p, c.get_den()) || !divides(p, c.get_num())) return false;
  return true;
}

int content_valuation(const QuartElement& x, const Int& p) {
  int v = -1;
  for (const auto& c : x.coords()) {
    if (c == 0) continue;
    int w = valuation(p, c);
    if (v < 0 || w < v) v = w;
  }
  return v;
}

}  // namespace

ConditionMP condition_m_p(const FieldParams& params, const QuartElement& m, const Int& p) {
  ConditionMP out;
  if (!m.is_primitive() || divides(p, params.C)) {
    out.applicable = false;
    out.data = {{"reason", m.is_primitive() ? "p divides C" : "m is not primitive"}};
    return out;
  }
  Int norm = rational_norm_integer(m);
  int vN = valuation(p, norm);
  QuartElement ms = m * sigma(params, m);
  QuartElement msi = m * sigma_power(params, m, 3);
  bool d1 = divisible_element(ms, p), d2 = divisible_element(msi, p);
  out.which = d1 && d2 ? 'A' : (d1 || d2) ? 'B' : 'C';
  out.data = {{"case", std::string(1, out.which)}, {"v_p(N)", str(vN)}};

  // per prime of k: v_{p_i}(m) = min(v(X(c_i)), v(Y(c_i))) and v_{p_i}(N_{K/k}(m))
  std::array<int, 2> vm{}, vn{};
  with_escalation(local_precision(p, params, norm), [&](int k) {
    PAdicInt c = split_root(params, p, k);
    for (int i = 0; i < 2; ++i) {
      PAdicInt ci = i == 0 ? c : -c;
      PAdicInt X = evaluate(m.X(), ci), Y = evaluate(m.Y(), ci);
      int vx = X.is_zero() ? k : X.valuation();
      int vy = Y.is_zero() ? k : Y.valuation();
      vm[i] = std::min(vx, vy);
      if (vm[i] >= k) throw PrecisionError("X and Y vanish at this precision");
      vn[i] = evaluate(norm_K_over_k(m), ci).valuation();
    }
    return 0;
  });
  out.holds = vm[0] % 2 == 0 && vm[1] % 2 == 0 && vn[0] % 2 == 0 && vn[1] % 2 == 0;
  for (int i = 0; i < 2; ++i) {
    std::string tag = i == 0 ? "p1" : "p2";
    out.data.push_back({"v_" + tag + "(m)", str(vm[i])});
    out.data.push_back({"v_" + tag + "(N_K/k(m))", str(vn[i])});
  }

  if (out.which == 'A') {
    int i1 = vm[0] > 0 ? 0 : 1;
    out.holds_as_printed = vm[i1] % 2 == 0 && vn[1 - i1] % 2 == 0 && vN % 2 == 0;
  } else if (out.which == 'B') {
    int v = content_valuation(d1 ? ms : msi, p);
    out.holds_as_printed = v % 2 == 0 && vN % 2 == 0;
    out.data.push_back({d1 ? "v_p(m*sigma(m))" : "v_p(m*sigma^-1(m))", str(v)});
  } else {
    out.holds_as_printed = vN % 2 == 0;
  }
  out.data.push_back({"three_case_verdict", out.holds_as_printed ? "holds" : "fails"});
  return out;
}

RulePrediction predict_RR(const FieldParams& params, const QuartElement& m, const Int& p) {
  (void)params;
  if (mod(p, 4) == 1) return all_plus_prediction(1, "i-in-Qp", {});
  Int norm = rational_norm_integer(m);
  RulePrediction r;
  r.rule = "rr-coordinates";
  int v = divides(p, norm) ? rr_coordinate_rule(m, p) : 1;
  r.per_place = {v};
  r.all_plus = v == 1;
  r.data = {{"p|x1", divides(p, m.x1().get_num()) ? "yes" : "no"},
            {"p|y1", divides(p, m.y1().get_num()) ? "yes" : "no"},
            {"p|x2", divides(p, m.x2().get_num()) ? "yes" : "no"}};
  return r;
}

RulePrediction predict_inert(const FieldParams&, const QuartElement&, const Int& p) {
  return all_plus_prediction(1, rule_name(p, SplitTag::II), {{"reason", "k_p contains sqrt(-1)"}});
}

RulePrediction predict_SI(const FieldParams&, const QuartElement&, const Int& p) {
  return all_plus_prediction(2, rule_name(p, SplitTag::SI), {{"reason", "K_P is unramified of degree 2"}});
}

RulePrediction predict_SS(const FieldParams& params, const QuartElement& m, const Int& p) {
  if (mod(p, 4) == 1) return all_plus_prediction(4, "i-in-Qp", {});
  RulePrediction r;
  r.rule = "split-valuation-parity";
  r.per_place.assign(4, std::nullopt);
  ConditionMP c = condition_m_p(params, m, p);
  r.applicable = c.applicable;
  r.data = c.data;
  if (c.applicable) r.all_plus = c.holds;
  return r;
}

RulePrediction predict_SR(const FieldParams& params, const QuartElement& m, const Int& p) {
  if (mod(p, 4) == 1) return all_plus_prediction(2, "i-in-Qp", {});
  RulePrediction r;
  r.rule = "ramified-valuation-parity";
  r.per_place.assign(2, std::nullopt);
  if (!m.is_primitive() || divides(p, params.C)) {
    r.applicable = false;
    r.data = {{"reason", m.is_primitive() ? "p divides C" : "m is not primitive"}};
    return r;
  }
  Int norm = rational_norm_integer(m);
  int vN = valuation(p, norm);
  with_escalation(local_precision(p, params, norm), [&](int k) {
    PAdicInt c = split_root(params, p, k);
    QuadElement nk = norm_K_over_k(m);
    int v1 = evaluate(nk, c).valuation();
    int v2 = evaluate(nk, -c).valuation();
    bool both_divide = v1 >= 1 && v2 >= 1;
    r.all_plus = !both_divide && vN % 2 == 0;
    r.data = {{"v_p(N)", str(vN)}, {"v_P1(m)", str(v1)}, {"v_P2(m)", str(v2)},
              {"both_divide_m", both_divide ? "yes" : "no"}};
    return 0;
  });
  return r;
}

namespace {

// odd part of x mod 4 and its 2-adic valuation, from a residue mod 2^k
std::optional<int> dyadic_rational_symbol(const Int& x, int k) {
  Int r = mod(x, pow_int(2, static_cast<unsigned long>(k)));
  if (r == 0) return std::nullopt;
  int v = valuation(2, r);
  if (v + 2 > k) return std::nullopt;
  Int odd = r / pow_int(2, static_cast<unsigned long>(v));
  return mod(odd, 4) == 1 ? 1 : -1;
}

}  // namespace

RulePrediction predict_dyadic(const FieldParams& params, const QuartElement& m) {
  SplittingType type = classify_dyadic(params);
  RulePrediction r;
  r.rule = rule_name(2, type.tag);
  if (type.single_dyadic_spot) {
    r.per_place = {std::nullopt};
    r.data = {{"reason", "single dyadic place: +1 whenever every other place is +1"}};
    return r;
  }
  if (!m.is_primitive()) {
    r.applicable = false;
    r.per_place.assign(type.tag == SplitTag::SS ? 4 : 2, std::nullopt);
    r.data = {{"reason", "m is not primitive"}};
    return r;
  }
  const Int& A = params.A;
  const Int& B = params.B;
  const Int& D = params.D;
  Int x1 = m.x1().get_num(), x2 = m.x2().get_num(), y1 = m.y1().get_num(), y2 = m.y2().get_num();
  PAdicInt c_exact = split_root(params, 2, 12);
  Int e = dyadic::e_of(D);
  // the table root and the canonical root agree up to sign mod 64
  int e_sign = mod(Int(e - c_exact.residue()), 64) == 0 ? 1 : -1;
  r.data.push_back({"e(D)", str(e)});

  if (type.tag == SplitTag::SS) {
    r.per_place.assign(4, std::nullopt);
    for (int s : {1, -1}) {
      Int se = s * e;
      Int Ns = A * (D + B * se);
      Int te = dyadic::e_of(Ns);
      // exact theta at this prime, to match the sign of the table root
      int place_side = s * e_sign;  // +1: sqrtD -> c
      PAdicInt t_exact = *split_side(params, m, 2, place_side, 16).t;
      int t_sign = mod(Int(te - t_exact.residue()), 32) == 0 ? 1 : -1;
      r.data.push_back({s > 0 ? "e(A(D+Be))" : "e(A(D-Be))", str(te)});
      for (int ts : {1, -1}) {
        Int value = (x1 + x2 * se) + (y1 + y2 * se) * (ts * te);
        auto sym = dyadic_rational_symbol(value, 6);
        size_t idx = (place_side > 0 ? 0 : 2) + (ts * t_sign > 0 ? 0 : 1);
        r.per_place[idx] = sym;
        r.data.push_back({"value[" + std::string(s > 0 ? "+" : "-") + "e," + (ts > 0 ? "+" : "-") + "t] mod 64",
                          str(mod(value, 64))});
      }
    }
  } else if (type.tag == SplitTag::SR) {
    r.per_place.assign(2, std::nullopt);
    for (int s : {1, -1}) {
      int k = 24;
      PAdicInt cs = s > 0 ? split_root(params, 2, k) : -split_root(params, 2, k);
      PAdicInt alpha = PAdicInt(2, k, A) * (PAdicInt(2, k, D) + PAdicInt(2, k, B) * cs);
      dyadic::LabelledRadicand lr = dyadic::label_radicand(alpha);
      PAdicInt X = evaluate(m.X(), cs), Y = evaluate(m.Y(), cs);
      Int b = Y.residue() * pow_int(2, static_cast<unsigned long>(lr.j)) * lr.s.residue();
      int prec = std::min({X.precision(), Y.precision(), lr.s.precision()});
      dyadic::DyadicQuadElement t = dyadic::DyadicQuadElement::from_sqrt_coords(lr.label, X.residue(), b, prec);
      int v = t.valuation();
      dyadic::DyadicQuadElement h = t.divide_by_uniformizer(v);
      int pi_sym = dyadic::minus_one_symbol(dyadic::uniformizer(lr.label, prec));
      int sym = (v % 2 ? pi_sym : 1) * (dyadic::unit_is_sum_two_squares(h) ? 1 : -1);
      r.per_place[s > 0 ? 0 : 1] = sym;
      std::string tag = s > 0 ? "P1" : "P2";
      r.data.push_back({tag + ".label", str(lr.label)});
      r.data.push_back({tag + ".valuation", str(v)});
      r.data.push_back({tag + ".unit_sum_of_squares", dyadic::unit_is_sum_two_squares(h) ? "yes" : "no"});
      r.data.push_back({tag + ".two_divides_unit_minus_one", dyadic::unit_rule_as_printed(h) ? "yes" : "no"});
    }
  } else {  // SI(2): both completions are Q_2(sqrt 5)
    r.per_place.assign(2, std::nullopt);
    for (int s : {1, -1}) {
      Int se = s * e;
      Int Ns = A * (D + B * se);
      dyadic::DyadicQuadElement root = dyadic::e5_of(Ns, 4);
      dyadic::DyadicQuadElement X = dyadic::DyadicQuadElement::from_sqrt_coords(5, x1 + x2 * se, 0, 4);
      dyadic::DyadicQuadElement Y = dyadic::DyadicQuadElement::from_sqrt_coords(5, y1 + y2 * se, 0, 4);
      dyadic::DyadicQuadElement t = X + Y * root;
      std::string tag = (s * e_sign > 0) ? "P1" : "P2";
      r.data.push_back({tag + ".e5", "(" + str(root.u()) + "," + str(root.v()) + ")"});
      if (t.is_zero()) continue;
      int v = t.valuation();
      if (v + 2 > 4) continue;
      dyadic::DyadicQuadElement h = t.divide_by_uniformizer(v);
      bool ok = dyadic::unit_rule_as_printed(h);
      r.per_place[s * e_sign > 0 ? 0 : 1] = ok ? 1 : -1;
      r.data.push_back({tag + ".valuation", str(v)});
      r.data.push_back({tag + ".unit_mod4", "(" + str(h.with_precision(2).u()) + "," + str(h.with_precision(2).v()) + ")"});
    }
  }
  bool all_known = std::all_of(r.per_place.begin(), r.per_place.end(), [](const auto& x) { return x.has_value(); });
  if (all_known)
    r.all_plus = std::all_of(r.per_place.begin(), r.per_place.end(), [](const auto& x) { return *x == 1; });
  return r;
}

RulePrediction predict(const FieldParams& params, const QuartElement& m, const Int& p) {
  if (p == 2) return predict_dyadic(params, m);
  switch (classify_odd(params, p).tag) {
    case SplitTag::RR: return predict_RR(params, m, p);
    case SplitTag::II:
    case SplitTag::IR: return predict_inert(params, m, p);
    case SplitTag::SI: return predict_SI(params, m, p);
    case SplitTag::SS: return predict_SS(params, m, p);
    case SplitTag::SR: return predict_SR(params, m, p);
  }
  throw std::logic_error("unreachable");
}

std::vector<SymbolCertificate> symbols_for_rational_P(const FieldParams& params, const Int& P) {
  if (P <= 0) throw std::invalid_argument("P must be positive");
  Factorization f = factorize(P);
  for (const auto& pp : f.factors)
    if (pp.exponent != 1 || mod(pp.prime, 4) != 3)
      throw std::invalid_argument("P must be a product of distinct primes = 3 mod 4");
  std::vector<SymbolCertificate> out;
  for (const auto& pp : f.factors) {
    SplittingType t = classify_odd(params, pp.prime);
    int v = t.tag == SplitTag::SS ? -1 : 1;
    std::string why = t.tag == SplitTag::SS ? "K_P = Q_p and v_p(P) = 1" : "local degree is even";
    for (auto& l : labels_for(t.tag))
      out.push_back({finite_place(pp.prime, l, t), v, "rational-factor", {{"reason", why}}});
  }
  SplittingType t2 = classify_dyadic(params);
  int alpha = static_cast<int>(f.factors.size());
  int v2 = (t2.tag == SplitTag::SS && !t2.single_dyadic_spot && alpha % 2) ? -1 : 1;
  std::string why = t2.tag == SplitTag::SS && !t2.single_dyadic_spot ? "K_P = Q_2 and P = (-1)^alpha mod 4"
                                                                     : "local degree is even";
  std::vector<std::string> labels = t2.single_dyadic_spot ? std::vector<std::string>{"P"} : labels_for(t2.tag);
  for (auto& l : labels)
    out.push_back({finite_place(2, l, t2), v2, "rational-factor", {{"reason", why}, {"alpha", str(alpha)}}});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
  return out;
}

}  // namespace qts
