// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "qts/dyadic.hpp"
#include "qts/oracle.hpp"

namespace qts::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_integer_literal(const std::string& s) {
  static const std::regex re("[+-]?[0-9]+");
  return std::regex_match(s, re);
}

Json jint(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Json coords_json(const QuartElement& m) {
  Json a = Json::array();
  for (const auto& c : m.coords()) a.push_back(rat_str(c));
  return a;
}

Json data_json(const CertData& d) {
  Json o = Json::object();
  for (const auto& [k, v] : d) o[k] = v;
  return o;
}

Json place_json(const Place& p) {
  Json o;
  o["kind"] = kind_name(p.kind);
  o["p"] = p.kind == Place::Kind::Infinite ? Json("inf") : jint(p.p);
  o["label"] = p.label;
  o["type"] = p.kind == Place::Kind::Infinite ? Json(nullptr) : Json(to_string(p.type.tag));
  return o;
}

Json certificates_json(const std::vector<SymbolCertificate>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) {
    Json o;
    o["place"] = place_json(c.place);
    o["value"] = c.value;
    o["rule"] = c.rule;
    o["data"] = data_json(c.data);
    a.push_back(o);
  }
  return a;
}

// ---------------------------------------------------------------- field input

struct Field {
  FieldParams params;
  std::optional<NormalizedField> normalized;  // set when given as a radicand
};

Field resolve_field(const JobSpec& spec) {
  if (spec.field && spec.radicand) throw UsageError("give either --field or --radicand, not both");
  if (spec.field) {
    const auto& f = *spec.field;
    return {validate_params(f[0], f[1], f[2], f[3]), std::nullopt};
  }
  if (spec.radicand) {
    if (!spec.D) throw UsageError("--radicand needs --D");
    NormalizedField nf = normalize_radicand(*spec.D, QuadElement(spec.radicand->first, spec.radicand->second));
    return {nf.params, nf};
  }
  throw UsageError("missing --field or --radicand");
}

QuartElement resolve_element(const Field& f, const std::vector<Rat>& c) {
  if (!f.normalized) return element(f.params, c[0], c[1], c[2], c[3]);
  return to_normal_basis(*f.normalized, QuadElement(c[0], c[1]), QuadElement(c[2], c[3]));
}

Json field_json(const Field& f) {
  const FieldParams& p = f.params;
  Json o;
  o["A"] = jint(p.A);
  o["B"] = jint(p.B);
  o["C"] = jint(p.C);
  o["D"] = jint(p.D);
  o["l"] = p.l;
  o["conductor"] = jint(p.conductor);
  o["relative_discriminant"] = to_string(p.rel_disc);
  o["discriminant"] = jint(p.abs_disc);
  o["totally_real"] = p.totally_real();
  if (f.normalized) {
    Json r;
    r["alpha"] = to_string(f.normalized->params.presentation->alpha);
    r["rho"] = to_string(f.normalized->rho);
    r["conjugate_form"] = f.normalized->conjugate_form;
    o["normalization"] = r;
  }
  return o;
}

Json splitting_json(const FieldParams& params, const std::vector<Int>& primes) {
  Json a = Json::array();
  for (const Int& p : primes) {
    SplittingType t = classify(params, p);
    DecompositionShape s = shape(t.tag);
    Json o;
    o["p"] = jint(p);
    o["type"] = to_string(t.tag);
    o["g"] = s.g;
    o["e"] = s.e;
    o["f"] = s.f;
    if (p == 2) o["single_dyadic_spot"] = t.single_dyadic_spot;
    a.push_back(o);
  }
  return a;
}

std::vector<Int> primes_of(std::initializer_list<Int> values) {
  std::set<Int> ps = {2};
  for (const Int& v : values)
    if (v != 0)
      for (const auto& f : factorize(v).factors) ps.insert(f.prime);
  return {ps.begin(), ps.end()};
}

Json decision_json(const Field& f, const QuartElement* m, const Decision& d) {
  Json o;
  o["field"] = field_json(f);
  if (m) {
    Json e;
    e["coordinates"] = coords_json(*m);
    e["text"] = to_string(*m);
    e["norm_K_over_k"] = to_string(norm_K_over_k(*m));
    e["norm_K_over_Q"] = rat_str(norm_K_over_Q(*m));
    o["element"] = e;
  } else {
    o["element"] = nullptr;
  }
  o["verdict"] = d.verdict ? "yes" : "no";
  o["certificates"] = certificates_json(d.certificates);
  if (d.preprocessing) {
    const auto& p = *d.preprocessing;
    Json pre;
    pre["lambda"] = rat_str(p.lambda);
    pre["P"] = Json::array();
    for (const auto& x : p.P) pre["P"].push_back(jint(x));
    pre["Q"] = Json::array();
    for (const auto& x : p.Q) pre["Q"].push_back(jint(x));
    pre["primitive_part"] = coords_json(p.m);
    o["preprocessing"] = pre;
  } else {
    o["preprocessing"] = nullptr;
  }
  o["failed_conditions"] = d.failed_conditions;
  Json cl = Json::array();
  for (const auto& c : d.clauses) {
    Json x;
    x["id"] = c.id;
    x["holds"] = c.holds;
    x["rule"] = c.rule;
    x["data"] = data_json(c.data);
    cl.push_back(x);
  }
  o["clauses"] = cl;
  o["symbol_product"] = symbol_product(d.certificates);
  return o;
}

// ---------------------------------------------------------------- text output

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string data_text(const Json& d) {
  std::string s;
  for (auto it = d.begin(); it != d.end(); ++it) {
    if (!s.empty()) s += " ";
    s += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return s;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_field_text(std::ostream& out, const Json& f) {
  out << "field      A=" << scalar_text(f["A"]) << " B=" << scalar_text(f["B"]) << " C=" << scalar_text(f["C"])
      << " D=" << scalar_text(f["D"]) << "  " << (f["totally_real"].get<bool>() ? "totally real" : "totally complex")
      << "\n";
  out << "           conductor 2^" << f["l"].dump() << "|A|D = " << scalar_text(f["conductor"]) << ", disc "
      << scalar_text(f["discriminant"]) << ", relative disc " << f["relative_discriminant"].get<std::string>() << "\n";
  if (f.contains("normalization"))
    out << "           from radicand " << f["normalization"]["alpha"].get<std::string>() << ": sqrt(alpha) = ("
        << f["normalization"]["rho"].get<std::string>() << ") theta\n";
}

void print_splitting_text(std::ostream& out, const Json& s) {
  out << "splitting\n";
  for (const auto& r : s) {
    out << "  " << pad(scalar_text(r["p"]), 8) << pad(r["type"].get<std::string>(), 4) << "g=" << r["g"].dump()
        << " e=" << r["e"].dump() << " f=" << r["f"].dump();
    if (r.contains("single_dyadic_spot") && r["single_dyadic_spot"].get<bool>()) out << "  (one dyadic place)";
    out << "\n";
  }
}

void print_decision_text(std::ostream& out, const Json& j) {
  print_field_text(out, j["field"]);
  if (!j["element"].is_null()) {
    out << "element    " << j["element"]["text"].get<std::string>() << "\n";
    out << "           N_K/k = " << j["element"]["norm_K_over_k"].get<std::string>()
        << ", N_K/Q = " << j["element"]["norm_K_over_Q"].get<std::string>() << "\n";
  }
  if (!j["preprocessing"].is_null()) {
    const auto& p = j["preprocessing"];
    auto list = [](const Json& a) {
      std::string s;
      for (const auto& x : a) s += (s.empty() ? "" : "*") + scalar_text(x);
      return s.empty() ? std::string("1") : s;
    };
    out << "content    lambda=" << p["lambda"].get<std::string>() << " P=" << list(p["P"]) << " Q=" << list(p["Q"])
        << "\n";
  }
  out << "clauses\n";
  for (const auto& c : j["clauses"])
    out << "  " << (c["holds"].get<bool>() ? "[ok]   " : "[FAIL] ") << pad(c["id"].get<std::string>(), 20)
        << pad(c["rule"].get<std::string>(), 26) << data_text(c["data"]) << "\n";
  out << "certificates\n";
  for (const auto& c : j["certificates"]) {
    const auto& pl = c["place"];
    std::string where = scalar_text(pl["p"]) + " " + pl["label"].get<std::string>();
    if (!pl["type"].is_null()) where += " " + pl["type"].get<std::string>();
    out << "  " << pad(where, 16) << (c["value"].get<int>() > 0 ? "+1  " : "-1  ")
        << pad(c["rule"].get<std::string>(), 26) << data_text(c["data"]) << "\n";
  }
  out << "product of symbols " << (j["symbol_product"].get<int>() > 0 ? "+1" : "-1") << "\n";
  out << "verdict    " << j["verdict"].get<std::string>() << "\n";
}

void emit(std::ostream& out, Format fmt, const Json& j, void (*text)(std::ostream&, const Json&)) {
  if (fmt == Format::Json)
    out << j.dump(2) << "\n";
  else
    text(out, j);
}

// ---------------------------------------------------------------- commands

int cmd_classify(const JobSpec& spec, std::ostream& out) {
  Field f = resolve_field(spec);
  Int n = 0;
  if (spec.elem) n = norm_K_over_Q(integral_square_multiple(resolve_element(f, *spec.elem))).get_num();
  Json o;
  o["field"] = field_json(f);
  o["splitting"] = splitting_json(f.params, primes_of({f.params.A, f.params.D, n, spec.prime.value_or(0)}));
  emit(out, spec.format, o, [](std::ostream& os, const Json& j) {
    print_field_text(os, j["field"]);
    print_splitting_text(os, j["splitting"]);
  });
  return Exit::Yes;
}

int report_decision(const JobSpec& spec, std::ostream& out, const Field& f, const QuartElement* m,
                    const Decision& d) {
  emit(out, spec.format, decision_json(f, m, d), print_decision_text);
  return d.verdict ? Exit::Yes : Exit::No;
}

Decision zero_decision() {
  Decision d;
  d.verdict = true;
  d.clauses.push_back({"zero", true, "trivial", {{"reason", "0 = 0^2 + 0^2"}}});
  return d;
}

int cmd_decide(const JobSpec& spec, std::ostream& out) {
  Field f = resolve_field(spec);
  if (!spec.elem) throw UsageError("decide needs --elem");
  QuartElement m = resolve_element(f, *spec.elem);
  Decision d = m.is_zero() ? zero_decision() : is_sum_of_two_squares(f.params, m);
  return report_decision(spec, out, f, &m, d);
}

int cmd_prime(const JobSpec& spec, std::ostream& out) {
  Field f = resolve_field(spec);
  if (!spec.prime) throw UsageError("prime needs --prime");
  if (!is_prime(*spec.prime)) throw UsageError("--prime " + spec.prime->get_str() + " is not a prime");
  QuartElement m = element(f.params, *spec.prime, 0, 0, 0);
  return report_decision(spec, out, f, &m, prime_is_sum_of_two_squares(f.params, *spec.prime));
}

int cmd_minus_one(const JobSpec& spec, std::ostream& out) {
  Field f = resolve_field(spec);
  QuartElement m = element(f.params, -1, 0, 0, 0);
  return report_decision(spec, out, f, &m, minus_one_is_sum_of_two_squares(f.params));
}

int cmd_verify(const JobSpec& spec, std::ostream& out) {
  Field f = resolve_field(spec);
  if (!spec.elem) throw UsageError("verify needs --elem");
  QuartElement m = resolve_element(f, *spec.elem);
  if (m.is_zero()) return report_decision(spec, out, f, &m, zero_decision());
  Decision d = is_sum_of_two_squares(f.params, m);
  Json report = decision_json(f, &m, d);
  bool agree = true;

  Json local = Json::array();
  QuartElement M = integral_square_multiple(m);
  Int n = norm_K_over_Q(M).get_num();
  for (const auto& pp : factorize(n).factors) {
    const Int& p = pp.prime;
    if (p == 2 || mod(p, 4) != 3 || !oracle::local_oracle_applies(f.params, p)) continue;
    int k = spec.modulus_exponent > 0 ? spec.modulus_exponent : pp.exponent + 1;
    Json o;
    o["p"] = jint(p);
    o["k"] = k;
    if (pow_int(p, static_cast<unsigned long>(k)) > 40000) {
      o["skipped"] = "modulus too large to enumerate";
      local.push_back(o);
      continue;
    }
    auto brute = oracle::local_solvable_places(f.params, M, p, k);
    auto exact = place_symbols(f.params, M, p);
    Json places = Json::array();
    for (size_t i = 0; i < brute.size(); ++i) {
      bool ok = brute[i].solvable == (exact[i].value == 1);
      agree = agree && ok;
      places.push_back({{"label", brute[i].label}, {"solvable", brute[i].solvable}, {"symbol", exact[i].value},
                        {"agrees", ok}});
    }
    o["places"] = places;
    local.push_back(o);
  }
  Json oracle;
  oracle["local"] = local;
  auto rep = oracle::search_representation(m, {spec.search_bound, {1, 2}});
  Json search;
  search["coeff_bound"] = spec.search_bound;
  if (rep) {
    search["x"] = coords_json(rep->first);
    search["y"] = coords_json(rep->second);
    search["agrees"] = d.verdict;
    agree = agree && d.verdict;
  } else {
    search["x"] = nullptr;
    search["y"] = nullptr;
  }
  oracle["search"] = search;
  oracle["agrees"] = agree;
  report["oracle"] = oracle;

  emit(out, spec.format, report, [](std::ostream& os, const Json& j) {
    print_decision_text(os, j);
    os << "oracle\n";
    for (const auto& l : j["oracle"]["local"]) {
      os << "  local p=" << scalar_text(l["p"]) << " mod p^" << l["k"].dump();
      if (l.contains("skipped")) {
        os << "  skipped: " << l["skipped"].get<std::string>() << "\n";
        continue;
      }
      for (const auto& pl : l["places"])
        os << "  " << pl["label"].get<std::string>() << (pl["solvable"].get<bool>() ? " solvable" : " unsolvable")
           << (pl["agrees"].get<bool>() ? "" : " (DISAGREES)");
      os << "\n";
    }
    const auto& s = j["oracle"]["search"];
    if (s["x"].is_null())
      os << "  search (bound " << s["coeff_bound"].dump() << "): no representation found\n";
    else
      os << "  search: x = " << s["x"].dump() << ", y = " << s["y"].dump() << "\n";
    os << "  oracle " << (j["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
  });
  if (!agree) return Exit::OracleDisagrees;
  return d.verdict ? Exit::Yes : Exit::No;
}

int cmd_selftest(const JobSpec& spec, std::ostream& out) {
  Json checks = Json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    all_ok = all_ok && ok;
  };

  int bad = 0;
  for (const auto& row : dyadic::e_table()) {
    Int w = row.residue_class, e = row.e_value;
    bool ok = mod(e, 2) == 1 && mod(Int(e * e - w), 128) == 0;
    PAdicInt h = sqrt_2adic(w, 7);  // the Hensel root, up to sign
    ok = ok && (mod(Int(h.residue() - e), 64) == 0 || mod(Int(h.residue() + e), 64) == 0);
    bad += !ok;
  }
  record("e-table", bad == 0, std::to_string(dyadic::e_table().size()) + " rows, " + std::to_string(bad) + " bad");

  bad = 0;
  int rows = 0;
  for (long N : {5L, 13L, 21L, 29L, -3L, -11L, 37L, 45L}) {
    dyadic::DyadicQuadElement r = dyadic::e5_of(N, 6);
    dyadic::DyadicQuadElement sq = r * r - dyadic::DyadicQuadElement::from_sqrt_coords(5, N, 0, 6);
    bad += !(mod(sq.u(), 32) == 0 && mod(sq.v(), 32) == 0);
    ++rows;
  }
  record("e5-roots", bad == 0, std::to_string(rows) + " values, " + std::to_string(bad) + " bad");

  bad = 0;
  rows = 0;
  for (long p : {3L, 7L, 11L, 19L, 23L, 43L})
    for (long a = 1; a < 60; ++a) {
      if (a % p == 0 || jacobi(Int(a), Int(p)) != 1) continue;
      auto r = sqrt_mod_prime_power(a, p, 5);
      bad += !r || mod(Int(r->residue() * r->residue() - a), r->modulus()) != 0;
      ++rows;
    }
  record("hensel-roots", bad == 0, std::to_string(rows) + " roots, " + std::to_string(bad) + " bad");

  bad = 0;
  rows = 0;
  for (long d : {5L, 13L, 17L, 29L, 37L, 41L})
    for (long a : {-7L, -3L, -1L, 1L, 3L, 5L}) {
      for (long b = 1; b * b < d; ++b) {
        auto c = exact_sqrt(Int(d - b * b));
        if (!c) continue;
        FieldParams fp;
        try {
          fp = validate_params(a, b, *c, d);
        } catch (const FieldError&) {
          continue;
        }
        for (long x : {1L, 3L, 6L}) {
          QuartElement m = element(fp, x, -2, 1, x % 4);
          bad += symbol_product(all_symbols(fp, m)) != 1;
          ++rows;
        }
      }
    }
  record("product-formula", bad == 0, std::to_string(rows) + " elements, " + std::to_string(bad) + " bad");

  Json o;
  o["checks"] = checks;
  o["verdict"] = all_ok ? "pass" : "fail";
  emit(out, spec.format, o, [](std::ostream& os, const Json& j) {
    for (const auto& c : j["checks"])
      os << (c["ok"].get<bool>() ? "[ok]   " : "[FAIL] ") << pad(c["check"].get<std::string>(), 18)
         << c["detail"].get<std::string>() << "\n";
    os << "selftest " << j["verdict"].get<std::string>() << "\n";
  });
  return all_ok ? Exit::Yes : Exit::No;
}

}  // namespace

std::vector<Int> parse_integers(const std::string& s, size_t count, const std::string& what) {
  std::vector<Int> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!is_integer_literal(tok))
      throw std::invalid_argument(what + ": expected an integer at column " + std::to_string(start + 1) + " of '" +
                                  s + "'");
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != count)
    throw std::invalid_argument(what + ": expected " + std::to_string(count) + " comma separated integers, got " +
                                std::to_string(out.size()));
  return out;
}

std::vector<Rat> parse_element(const std::string& s) {
  std::string body = s;
  Int den = 1;
  if (size_t slash = s.find('/'); slash != std::string::npos) {
    std::string d = s.substr(slash + 1);
    if (!is_integer_literal(d) || d.find('-') != std::string::npos)
      throw std::invalid_argument("--elem: expected a positive denominator at column " + std::to_string(slash + 2) +
                                  " of '" + s + "'");
    den = Int(d[0] == '+' ? d.substr(1) : d);
    if (den == 0) throw std::invalid_argument("--elem: zero denominator");
    body = s.substr(0, slash);
  }
  std::vector<Rat> out;
  for (const Int& n : parse_integers(body, 4, "--elem")) {
    Rat r(n, den);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether an element of a cyclic quartic field is a sum of two squares."};
  app.name("qts");
  app.require_subcommand(1);

  std::string field_s, rad_s, D_s, elem_s, prime_s, format_s = "text";
  long search_bound = 3;
  int modulus_exponent = 0;
  auto field_opts = [&](CLI::App* sub) {
    sub->add_option("--field", field_s, "A,B,C,D with theta^2 = A(D + B sqrt D), D = B^2 + C^2");
    sub->add_option("--radicand", rad_s, "a1,a2: the field Q(sqrt(a1 + a2 sqrt D)), normalized; needs --D");
    sub->add_option("--D", D_s, "D for --radicand");
    sub->add_option("--format", format_s, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto elem_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--elem", elem_s,
                              "x1,x2,y1,y2[/den]: (x1 + x2 sqrt D + (y1 + y2 sqrt D) theta)/den; with --radicand "
                              "theta is sqrt(a1 + a2 sqrt D)");
    if (required) o->required();
  };

  auto* classify = app.add_subcommand("classify", "field invariants and splitting types");
  field_opts(classify);
  elem_opt(classify, false);
  classify->add_option("--prime", prime_s, "also classify this prime");
  auto* decide = app.add_subcommand("decide", "decide an element, with per-place certificates");
  field_opts(decide);
  elem_opt(decide, true);
  auto* prime = app.add_subcommand("prime", "is a rational prime a sum of two squares in K");
  field_opts(prime);
  prime->add_option("--prime", prime_s, "the prime")->required();
  auto* minus_one = app.add_subcommand("minus-one", "is -1 a sum of two squares in K");
  field_opts(minus_one);
  auto* verify = app.add_subcommand("verify", "decide, then cross-check with brute-force oracles");
  field_opts(verify);
  elem_opt(verify, true);
  verify->add_option("--search-bound", search_bound, "coordinate bound for the representation search")
      ->check(CLI::Range(0L, 31L));
  verify->add_option("--modulus-exponent", modulus_exponent, "k for the local enumeration mod p^k")
      ->check(CLI::Range(1, 12));
  auto* selftest = app.add_subcommand("selftest", "internal consistency checks");
  selftest->add_option("--format", format_s, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : Exit::Usage;
  }

  JobSpec spec;
  spec.command = app.get_subcommands().front()->get_name();
  spec.format = format_s == "json" ? Format::Json : Format::Text;
  spec.search_bound = search_bound;
  spec.modulus_exponent = modulus_exponent;
  try {
    try {
      if (!field_s.empty()) spec.field = parse_integers(field_s, 4, "--field");
      if (!rad_s.empty()) {
        auto r = parse_integers(rad_s, 2, "--radicand");
        spec.radicand = std::make_pair(Rat(r[0]), Rat(r[1]));
      }
      if (!D_s.empty()) spec.D = parse_integers(D_s, 1, "--D")[0];
      if (!elem_s.empty()) spec.elem = parse_element(elem_s);
      if (!prime_s.empty()) spec.prime = parse_integers(prime_s, 1, "--prime")[0];
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (spec.command == "classify") return cmd_classify(spec, out);
    if (spec.command == "decide") return cmd_decide(spec, out);
    if (spec.command == "prime") return cmd_prime(spec, out);
    if (spec.command == "minus-one") return cmd_minus_one(spec, out);
    if (spec.command == "verify") return cmd_verify(spec, out);
    return cmd_selftest(spec, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Exit::Usage;
  } catch (const FieldError& e) {
    err << "invalid field: " << e.what() << "\n";
    return Exit::InvalidField;
  } catch (const NormalizationFailure& e) {
    if (e.code() == NormalizationError::DNotSquarefree) {
      err << "invalid field: " << e.what() << "\n";
      return Exit::InvalidField;
    }
    err << "normalization failed: " << e.what() << "\n";
    return Exit::NormalizationFailed;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return Exit::Internal;
  }
}

}  // namespace qts::cli
