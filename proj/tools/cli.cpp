#include <CLI11.hpp>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <thread>

#include "asmdpp/dpp.hpp"
#include "asmdpp/lorentzian.hpp"
#include "asmdpp/serialize.hpp"

using nlohmann::json;
using namespace asmdpp;

namespace {

struct Case {
  std::string command;
  json inputs;
  json expected, got;
  bool equal = false;
  long runtime_ms = 0;
};

class Timer {
 public:
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

int thread_cap() {
  if (const char* e = std::getenv("ASMDPP_THREADS")) {
    int v = std::atoi(e);
    if (v >= 1) return v;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? int(h) : 1;
}

// Run f(i) for i in [0, count); cases are independent and pure.
template <class F>
void parallel_for(int count, F&& f) {
  int nt = std::min(count, thread_cap());
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errs(count);
  std::vector<std::thread> ws;
  for (int t = 0; t < nt; ++t)
    ws.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          f(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  for (auto& w : ws) w.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

std::string csv_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

int emit_report(const std::vector<Case>& cases, const std::string& format,
                const std::string& outpath) {
  std::ostringstream out;
  if (format == "csv") {
    out << "command,inputs,expected,got,equal,runtime_ms\n";
    for (const Case& c : cases)
      out << csv_quote(c.command) << ',' << csv_quote(c.inputs.dump()) << ','
          << csv_quote(c.expected.dump()) << ',' << csv_quote(c.got.dump()) << ','
          << (c.equal ? "true" : "false") << ',' << c.runtime_ms << '\n';
  } else {
    json arr = json::array();
    for (const Case& c : cases)
      arr.push_back({{"command", c.command},
                     {"inputs", c.inputs},
                     {"expected", c.expected},
                     {"got", c.got},
                     {"equal", c.equal},
                     {"runtime_ms", c.runtime_ms}});
    out << arr.dump(2) << '\n';
  }
  if (outpath.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(outpath);
    if (!f) throw std::runtime_error("cannot open output path " + outpath);
    f << out.str();
  }
  for (const Case& c : cases)
    if (!c.equal) return 1;
  return 0;
}

MPoly apply_bindings(const MPoly& p, const std::vector<std::string>& sets) {
  if (sets.empty()) return p;
  std::map<std::string, RatFun> b;
  for (const std::string& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("binding must be var=value: " + s);
    b[s.substr(0, eq)] = RatFun(rat_from_string(s.substr(eq + 1)));
  }
  RatFun r = substitute(p, b);
  if (!r.is_polynomial()) throw InvalidObject("binding produced a non-polynomial");
  return r.num();
}

// ---- data commands -------------------------------------------------------

Case run_enum(bool asm_side, int n) {
  Timer t;
  Case c{asm_side ? "asm enum" : "dpp enum", {{"n", n}}};
  json items = json::array();
  if (asm_side)
    for (const ASM& m : enumerate_asm(n)) items.push_back(m.b);
  else
    for (const DPP& d : enumerate_dpp(n)) items.push_back(d.rows);
  c.got = {{"count", items.size()}, {"items", items}};
  // the two families are equinumerous; the opposite enumeration is the oracle
  size_t other = asm_side ? enumerate_dpp(n).size() : enumerate_asm(n).size();
  c.expected = {{"count", other}};
  c.equal = items.size() == other;
  c.runtime_ms = t.ms();
  return c;
}

Case run_zfun(bool asm_side, int n, const std::vector<std::string>& sets) {
  Timer t;
  Case c{asm_side ? "asm zfun" : "dpp zfun", {{"n", n}, {"set", sets}}};
  MPoly z = apply_bindings(asm_side ? z_asm_bruteforce(n) : z_dpp_bruteforce(n), sets);
  MPoly other = apply_bindings(asm_side ? z_dpp_bruteforce(n) : z_asm_bruteforce(n), sets);
  c.got = poly_to_json(z);
  c.expected = poly_to_json(other);
  c.equal = z == other;
  c.runtime_ms = t.ms();
  return c;
}

Case run_lambda_det(const std::string& input, const std::string& lam_expr) {
  Timer t;
  Case c{"lambda-det", {{"input", input}, {"lambda", lam_expr}}};
  std::ifstream f(input);
  if (!f) throw std::runtime_error("cannot open input file " + input);
  json j = json::parse(f);
  int n = int(j.size());
  if (n == 0) throw InvalidObject("empty matrix");
  Mat<RatFun> m(n, n);
  for (int i = 0; i < n; ++i) {
    if (int(j[i].size()) != n) throw InvalidObject("matrix is not square");
    for (int k = 0; k < n; ++k) {
      const json& e = j[i][k];
      m(i, k) = e.is_string() ? RatFun(MPoly::parse(e.get<std::string>()))
                              : RatFun(long(e.get<long>()));
    }
  }
  RatFun lam{MPoly::parse(lam_expr)};
  RatFun expansion = lambda_det_expansion(m, lam);
  RatFun tsystem = lambda_det_tsystem(m, lam);
  c.got = tsystem.str();
  c.expected = expansion.str();
  c.equal = tsystem == expansion;
  c.runtime_ms = t.ms();
  return c;
}

Case run_variety(const std::string& ps, const std::string& qs) {
  Timer t;
  Case c{"variety", {{"p", ps}, {"q", qs}}};
  Rat p = rat_from_string(ps), q = rat_from_string(qs);
  VarietyPoint pt = variety_intersection(p, q);
  Rat phi = (1 + pt.x - pt.y) / pt.sqrt_x, psi = (1 + pt.y - pt.x) / pt.sqrt_y;
  c.got = {{"x", pt.x.get_str()},
           {"y", pt.y.get_str()},
           {"sqrt_x", pt.sqrt_x.get_str()},
           {"sqrt_y", pt.sqrt_y.get_str()},
           {"phi", phi.get_str()},
           {"psi", psi.get_str()}};
  Rat cq = q + 1 / q, cp = p + 1 / p;
  c.expected = {{"phi", cq.get_str()}, {"psi", cp.get_str()}};
  c.equal = phi == cq && psi == cp;
  c.runtime_ms = t.ms();
  return c;
}

// ---- verification suites -------------------------------------------------

std::vector<Case> verify_asm_dpp(int nmax, const std::string& refined) {
  std::vector<std::string> sets;
  if (refined.empty())
    sets = {"z=1", "w=1"};
  else if (refined == "z")
    sets = {"w=1"};
  else if (refined != "zw")
    throw ParseError("--refined takes z or zw");
  std::vector<Case> cases(nmax);
  parallel_for(nmax, [&](int i) {
    int n = i + 1;
    Timer t;
    Case c{"verify asm-dpp", {{"n", n}, {"refined", refined}}};
    MPoly za = apply_bindings(z_asm_bruteforce(n), sets);
    MPoly zd = apply_bindings(z_dpp_bruteforce(n), sets);
    c.expected = poly_to_json(za);
    c.got = poly_to_json(zd);
    c.equal = za == zd;
    c.runtime_ms = t.ms();
    cases[i] = c;
  });
  return cases;
}

Rat draw_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<Case> verify_ik(int n, unsigned long seed, int samples) {
  std::vector<Case> cases(samples);
  parallel_for(samples, [&](int s) {
    std::mt19937_64 rng(seed * 1000003ULL + s);
    Timer t;
    Case c{"verify ik", {{"n", n}, {"seed", seed}, {"sample", s}}};
    for (int attempt = 0; attempt < 200; ++attempt) {
      Rat q = draw_rat(rng);
      if (q == 0 || q * q == 1) continue;
      std::vector<Rat> zeta, omega;
      for (int i = 0; i < 2 * n; ++i) {
        Rat v = draw_rat(rng);
        if (v == 0) {
          zeta.clear();
          break;
        }
        (i < n ? zeta : omega).push_back(v);
      }
      if (int(zeta.size()) != n) continue;
      try {
        Rat expected = sixv_bruteforce(q, zeta, omega);
        Rat got = ik_determinant(q, zeta, omega);
        json in = c.inputs;
        in["q"] = q.get_str();
        json zs = json::array(), ws = json::array();
        for (const Rat& z : zeta) zs.push_back(z.get_str());
        for (const Rat& w : omega) ws.push_back(w.get_str());
        in["zeta"] = zs;
        in["omega"] = ws;
        c.inputs = in;
        c.expected = expected.get_str();
        c.got = got.get_str();
        c.equal = expected == got;
        c.runtime_ms = t.ms();
        cases[s] = c;
        return;
      } catch (const DegenerateParameters&) {
      } catch (const DivisionByZero&) {
      }
    }
    throw DegenerateParameters("could not sample non-degenerate spectral parameters");
  });
  return cases;
}

Case bool_case(const std::string& command, const std::string& name, bool got, const Timer& t) {
  Case c{command, {{"check", name}}};
  c.expected = true;
  c.got = got;
  c.equal = got;
  c.runtime_ms = t.ms();
  return c;
}

std::vector<Case> verify_genfun(int order) {
  const std::string cmd = "verify genfun";
  std::vector<Case> cases;
  auto add = [&](const std::string& name, auto&& fn) {
    Timer t;
    cases.push_back(bool_case(cmd, name, fn(), t));
  };
  RatFun one(1);
  RatFun a = RatFun::var("a1"), b = RatFun::var("b1");
  RatFun ap = RatFun::var("a2"), bp = RatFun::var("b2");
  RatFun ga = RatFun::var("g1"), gp = RatFun::var("g2");
  int n = std::min(order, 8);
  add("propone", [&] {
    StructParams l1 = StructParams::L(a, b), l2 = StructParams::L(ap, bp);
    return structured_product(l1, l2).truncate(n) == l1.truncate(n) * l2.truncate(n);
  });
  add("proptwo", [&] {
    StructParams u1 = StructParams::U(a, b), u2 = StructParams::U(ap, bp);
    return structured_product(u1, u2).truncate(n) == u1.truncate(n) * u2.truncate(n);
  });
  add("propthree", [&] {
    StructParams l = StructParams::L(a, b), u = StructParams::U(a, b);
    return l.truncate(n) * structured_inverse(l).truncate(n) == Mat<RatFun>::identity(n) &&
           structured_inverse(u).truncate(n) * u.truncate(n) == Mat<RatFun>::identity(n);
  });
  add("propfour", [&] {
    StructParams l = StructParams::L(a, b), u = StructParams::U(ap, bp);
    return structured_product(l, u).truncate(n) == l.truncate(n) * u.truncate(n);
  });
  add("propfive", [&] {
    RatFun ep = RatFun::var("ep");
    StructParams u = StructParams::U(ep * RatFun(2), ep * RatFun(Rat(1, 3)));
    StructParams l = StructParams::L(ep * RatFun(Rat(3, 2)), ep * RatFun(Rat(1, 5)));
    StructParams prod = structured_product(u, l);
    InfMatrix g = graded_product(u.matrix(), l.matrix(), "ep", order, Grading::Total);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (g.entry(i, j) != series_truncate(prod.entry(i, j), "ep", order)) return false;
    return true;
  });
  add("propsix", [&] {
    RatFun ep = RatFun::var("ep");
    auto scaled = [&](RatFun al, RatFun be, RatFun gc) {
      return StructParams::T(ep * al, ep * be, ep * ep * gc);
    };
    StructParams s1 = scaled(RatFun(1), RatFun(Rat(1, 2)), RatFun(Rat(1, 3)));
    StructParams s2 = scaled(RatFun(2), RatFun(Rat(1, 4)), RatFun(Rat(-1, 2)));
    StructParams prod = structured_product(s1, s2);
    InfMatrix g = graded_product(s1.matrix(), s2.matrix(), "ep", order, Grading::Total);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        if (g.entry(i, j) != series_truncate(prod.entry(i, j), "ep", order)) return false;
    return true;
  });
  add("propseven", [&] {
    StructParams t = StructParams::T(a, b, ga);
    StructParams id = structured_product(t, structured_inverse(t));
    return id.family == StructParams::Family::I && id.prefactor == one;
  });
  add("detL", [&] {
    for (int k = 0; k <= std::min(order, 8); ++k)
      if (det(StructParams::L(a, b).truncate(k + 1)) != (a * b).pow(long(k) * (k + 1) / 2))
        return false;
    return true;
  });
  add("detT", [&] {
    for (int k = 0; k <= std::min(order, 8); ++k)
      if (det(StructParams::T(a, b, ga).truncate(k + 1)) !=
          (a * b + ga).pow(long(k) * (k + 1) / 2))
        return false;
    return true;
  });
  add("detUL", [&] {
    StructParams ul = structured_product(StructParams::U(a, b), StructParams::L(ap, bp));
    for (int k = 0; k <= std::min(order, 4); ++k) {
      RatFun e = (a * b * ap * bp).pow(long(k) * (k + 1) / 2) /
                 (one - b * bp).pow(long(k + 1) * (k + 1));
      if (det(ul.truncate(k + 1)) != e) return false;
    }
    return true;
  });
  add("unitri", [&] {
    Mat<RatFun> m = StructParams::T(a, b, ga).truncate(5);
    return det(sandwich(gp, m, a)) == det(m);
  });
  return cases;
}

std::vector<Case> verify_lorentz(const std::string& sub, int order) {
  const std::string cmd = "verify lorentz " + sub;
  std::vector<Case> cases;
  auto add = [&](const std::string& name, auto&& fn) {
    Timer t;
    cases.push_back(bool_case(cmd, name, fn(), t));
  };
  RatFun g = RatFun::var("g"), one(1);
  if (sub == "commute") {
    auto order_case = [&](const std::string& name, auto&& fn, bool want_commuting) {
      Timer t;
      int got = fn();
      Case c{cmd, {{"check", name}, {"order", order}}};
      c.expected = want_commuting ? "-1" : ">= 0";
      c.got = std::to_string(got);
      c.equal = want_commuting ? got == -1 : got >= 0;
      c.runtime_ms = t.ms();
      cases.push_back(c);
    };
    RatFun al = RatFun::var("al");
    RatFun a0{Rat(2, 3)};
    order_case("family-diagonal",
               [&] {
                 return commute_order(t_family(one, RatFun(3), al).matrix(),
                                      t_family(one, RatFun(3), RatFun(2) * al).matrix(), "al",
                                      order, Grading::Diagonal, 4);
               },
               true);
    order_case("variety-graded",
               [&] {
                 return commute_order(
                     t_struct(g, a0).matrix(),
                     t_family(one, lorentz_phi(g, a0), RatFun(2) * g * a0).matrix(), "g", order,
                     Grading::Diagonal, 4);
               },
               true);
    order_case("off-variety",
               [&] {
                 return commute_order(t_struct(g, a0).matrix(),
                                      t_struct(g, RatFun{Rat(3, 5)}).matrix(), "g", order,
                                      Grading::Total, 4);
               },
               false);
    add("rational-samples", [&] {
      Rat g1(1, 2), g2(1, 3);
      StructParams t1 = t_struct(RatFun{g1}, RatFun{solve_variety_a(2, g1)});
      StructParams t2 = t_struct(RatFun{g2}, RatFun{solve_variety_a(2, g2)});
      return commute_exact(t1, t2) && !commute_exact(t_struct(RatFun{g1}, RatFun(4)), t2);
    });
  } else if (sub == "spectral") {
    add("lambda-slices", [&] { return spectral_slice_check(std::min(order, 8)); });
    add("orthonormality", [&] { return orthonormality_check(4, order); });
    add("eigenvalue-asymptotics", [&] {
      for (Rat s : {Rat(2), Rat(1, 2), Rat(3, 5)})
        if (!eigenvalue_asymptotics_check(s, 3, order)) return false;
      return true;
    });
  } else if (sub == "addition") {
    add("t-family", [&] { return t_family_addition_check(); });
    add("l-family", [&] { return l_family_addition_check(); });
    add("pseudoexp", [&] { return pseudoexp_addition_check(std::min(order, 10)); });
    add("matrix-exponential", [&] { return matrix_exponential_check(4, std::min(order, 8)); });
    add("tau", [&] { return tau_addition_check(); });
  } else if (sub == "det") {
    add("vvt", [&] {
      for (int k = 1; k <= std::min(order, 8); ++k)
        if (!vvt_factorization_check(k)) return false;
      return true;
    });
    add("structured-det", [&] {
      MPoly al = MPoly::var("al"), be = MPoly::var("be"), gc = MPoly::var("gc");
      StructParams t = StructParams::T(RatFun(al), RatFun(be), RatFun(gc));
      for (int k = 0; k <= std::min(order, 8); ++k) {
        Mat<RatFun> tr = t.truncate(k + 1);
        Mat<MPoly> p(k + 1, k + 1);
        for (int i = 0; i <= k; ++i)
          for (int j = 0; j <= k; ++j) p(i, j) = tr(i, j).num();
        if (det_bareiss(p) != (al * be + gc).pow(long(k) * (k + 1) / 2)) return false;
      }
      return true;
    });
  } else {
    throw ParseError("verify lorentz takes commute|spectral|addition|det");
  }
  return cases;
}

std::vector<Case> verify_sandwich(int nmax) {
  const std::string cmd = "verify sandwich";
  std::vector<Case> cases(3 * nmax + 1);
  {
    Timer t;
    cases[0] = bool_case(cmd, "identity-plain", asm_dpp_sandwich_identity(), t);
  }
  parallel_for(3 * nmax, [&](int i) {
    int n = i % nmax + 1;
    Timer t;
    if (i < nmax)
      cases[i + 1] = bool_case(cmd, "identity-refined n=" + std::to_string(n),
                               asm_dpp_sandwich_identity_refined(n), t);
    else if (i < 2 * nmax)
      cases[i + 1] = bool_case(cmd, "matrix-plain n=" + std::to_string(n),
                               asm_dpp_sandwich_check(n), t);
    else
      cases[i + 1] = bool_case(cmd, "matrix-refined n=" + std::to_string(n),
                               asm_dpp_sandwich_check_refined(n), t);
  });
  return cases;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for ASM/DPP partition functions and Lorentzian transfer matrices"};
  app.require_subcommand(1);
  std::string format = "json", outpath;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", outpath, "output path (default stdout)");

  int n = 3, nmax = 4, order = 8, samples = 20;
  unsigned long seed = 1;
  std::vector<std::string> sets;
  std::string refined, lambda_expr = "lambda", input, pstr = "2", qstr = "2", lorentz_sub;

  CLI::App* asm_cmd = app.add_subcommand("asm", "alternating sign matrices");
  CLI::App* asm_enum = asm_cmd->add_subcommand("enum", "enumerate ASMs of order n");
  asm_enum->add_option("--n", n, "order")->check(CLI::Range(1, 6));
  CLI::App* asm_zfun = asm_cmd->add_subcommand("zfun", "partition function Z_ASM(x,y,z,w)");
  asm_zfun->add_option("--n", n, "order")->check(CLI::Range(1, 7));
  asm_zfun->add_option("--set", sets, "rational binding var=value (repeatable)");

  CLI::App* dpp_cmd = app.add_subcommand("dpp", "descending plane partitions");
  CLI::App* dpp_enum = dpp_cmd->add_subcommand("enum", "enumerate DPPs of order n");
  dpp_enum->add_option("--n", n, "order")->check(CLI::Range(1, 6));
  CLI::App* dpp_zfun = dpp_cmd->add_subcommand("zfun", "partition function Z_DPP(x,y,z,w)");
  dpp_zfun->add_option("--n", n, "order")->check(CLI::Range(1, 7));
  dpp_zfun->add_option("--set", sets, "rational binding var=value (repeatable)");

  CLI::App* ldet = app.add_subcommand("lambda-det", "lambda-determinant of a matrix");
  ldet->add_option("--input", input, "JSON matrix file")->required();
  ldet->add_option("--lambda", lambda_expr, "lambda as a polynomial expression");

  CLI::App* variety = app.add_subcommand("variety", "6V/Lorentzian variety intersection");
  variety->add_option("--p", pstr, "rational p")->required();
  variety->add_option("--q", qstr, "rational q")->required();

  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  verify->require_subcommand(1);
  CLI::App* v_ad = verify->add_subcommand("asm-dpp", "Z_ASM = Z_DPP");
  v_ad->add_option("--n-max", nmax, "largest order")->check(CLI::Range(1, 7));
  v_ad->add_option("--refined", refined, "refinement level z or zw");
  CLI::App* v_ik = verify->add_subcommand("ik", "Izergin-Korepin vs 6V brute force");
  v_ik->add_option("--n", n, "grid size")->check(CLI::Range(1, 4));
  v_ik->add_option("--seed", seed, "RNG seed");
  v_ik->add_option("--samples", samples, "number of samples")->check(CLI::Range(1, 1000));
  CLI::App* v_gf = verify->add_subcommand("genfun", "structured-family algebra");
  v_gf->add_option("--order", order, "grading/truncation order")->check(CLI::Range(1, 16));
  CLI::App* v_lz = verify->add_subcommand("lorentz", "Lorentzian transfer-matrix suite");
  v_lz->add_option("sub", lorentz_sub, "commute|spectral|addition|det")->required();
  v_lz->add_option("--order", order, "grading/series order")->check(CLI::Range(1, 16));
  CLI::App* v_sw = verify->add_subcommand("sandwich", "ASM/DPP sandwich identities");
  v_sw->add_option("--n", nmax, "largest truncation size")->check(CLI::Range(1, 6));

  // let --format/--output given after a subcommand reach the root app
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* s) {
    s->fallthrough();
    for (CLI::App* c : s->get_subcommands({})) enable_fallthrough(c);
  };
  for (CLI::App* s : app.get_subcommands({})) enable_fallthrough(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    std::vector<Case> cases;
    if (asm_enum->parsed())
      cases = {run_enum(true, n)};
    else if (asm_zfun->parsed())
      cases = {run_zfun(true, n, sets)};
    else if (dpp_enum->parsed())
      cases = {run_enum(false, n)};
    else if (dpp_zfun->parsed())
      cases = {run_zfun(false, n, sets)};
    else if (ldet->parsed())
      cases = {run_lambda_det(input, lambda_expr)};
    else if (variety->parsed())
      cases = {run_variety(pstr, qstr)};
    else if (v_ad->parsed())
      cases = verify_asm_dpp(nmax, refined);
    else if (v_ik->parsed())
      cases = verify_ik(n, seed, samples);
    else if (v_gf->parsed())
      cases = verify_genfun(order);
    else if (v_lz->parsed())
      cases = verify_lorentz(lorentz_sub, order);
    else if (v_sw->parsed())
      cases = verify_sandwich(nmax);
    return emit_report(cases, format, outpath);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
