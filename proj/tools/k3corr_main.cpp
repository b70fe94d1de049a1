#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3corr/criteria_x.hpp"
#include "k3corr/divisorial.hpp"
#include "k3corr/lattice.hpp"
#include "k3corr/pell.hpp"
#include "k3corr/selftest.hpp"
#include "k3corr/version.hpp"
#include "k3corr/y_side.hpp"

namespace {

using k3corr::Int;
using json = nlohmann::ordered_json;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_invalid = 2;

// All integers cross the JSON boundary as decimal strings.
std::string dec(const Int& n) { return k3corr::to_decimal(n); }
std::string dec(int n) { return std::to_string(n); }

Int parse_int(const std::string& text) {
  std::size_t i = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw k3corr::k3_error(k3corr::errc::invalid_input, "not an integer: " + text);
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw k3corr::k3_error(k3corr::errc::invalid_input, "not an integer: " + text);
  return Int(text);
}

json vec_json(const k3corr::LatticeVector& v) {
  return json{{"x", dec(v.x)}, {"y", dec(v.y)}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct CheckXArgs {
  std::string r, s, d, mu;
  std::string q_bound = "10000";
  std::string format = "text";
};

int run_check_x(const CheckXArgs& args) {
  const Int q_bound = parse_int(args.q_bound);
  const k3corr::XLattice L =
      k3corr::make_x_lattice(parse_int(args.r), parse_int(args.s), parse_int(args.d),
                             parse_int(args.mu));
  const auto verdict = k3corr::criteria_x::decide_iso_general_x(L, q_bound);
  if (args.format == "json") {
    json doc;
    doc["tool_version"] = k3corr::version_string;
    doc["command"] = "check-x";
    doc["params"] = {{"r", args.r},       {"s", args.s},
                     {"d", args.d},       {"mu", dec(L.mu)},
                     {"q_bound", dec(q_bound)}};
    doc["verdict"] = verdict.yes ? "YES" : "NO-within-bound";
    doc["witnesses"] = json::array();
    for (const auto& w : verdict.witnesses) {
      const auto h1 = k3corr::criteria_x::h1_from_witness(L, w);
      const auto ht = k3corr::criteria_x::htilde_from_h1(L, h1, w.series, w.alpha);
      doc["witnesses"].push_back({{"series", k3corr::series_name(w.series)},
                                  {"alpha", dec(w.alpha)},
                                  {"p", dec(w.p)},
                                  {"q", dec(w.q)},
                                  {"associated", vec_json(w.associated)},
                                  {"cond_ii_sign", dec(w.cond_ii_sign)},
                                  {"h1", vec_json(h1)},
                                  {"htilde", vec_json(ht)}});
    }
    emit(doc);
  } else {
    if (verdict.yes) {
      std::cout << "YES\n";
      for (const auto& w : verdict.witnesses)
        std::cout << "  witness: series=" << k3corr::series_name(w.series)
                  << " alpha=" << (w.alpha > 0 ? "+1" : "-1") << " (p, q)=(" << dec(w.p) << ", "
                  << dec(w.q) << ") associated=(" << dec(w.associated.x) << ", "
                  << dec(w.associated.y) << ") sign=" << (w.cond_ii_sign > 0 ? "+" : "-")
                  << "\n";
    } else {
      std::cout << "NO (no witness with q <= " << dec(q_bound) << ")\n";
    }
  }
  return verdict.yes ? exit_yes : exit_no;
}

struct CheckYArgs {
  std::string a, b, c, d, nu;
  std::string q_bound = "10000";
  std::string format = "text";
};

int run_check_y(const CheckYArgs& args) {
  const Int q_bound = parse_int(args.q_bound);
  const auto M = k3corr::y_side::make_y_lattice(parse_int(args.a), parse_int(args.b),
                                                parse_int(args.c), parse_int(args.d),
                                                parse_int(args.nu));
  const auto verdict = k3corr::y_side::decide_moduli_self(M, q_bound);
  const std::string verdict_word =
      verdict.yes ? "YES" : verdict.gcd_gate_failed ? "NO" : "NO-within-bound";
  if (args.format == "json") {
    json doc;
    doc["tool_version"] = k3corr::version_string;
    doc["command"] = "check-y";
    doc["params"] = {{"a", args.a},  {"b", args.b},
                     {"c", args.c},  {"d", args.d},
                     {"nu", dec(M.nu)}, {"q_bound", dec(q_bound)}};
    doc["verdict"] = verdict_word;
    if (verdict.gcd_gate_failed) doc["gate"] = "gcd(c, d) > 1";
    doc["witnesses"] = json::array();
    for (const auto& w : verdict.witnesses)
      doc["witnesses"].push_back({{"series", k3corr::series_name(w.series)},
                                  {"alpha", dec(w.alpha)},
                                  {"p", dec(w.p)},
                                  {"q", dec(w.q)},
                                  {"associated", vec_json(w.associated)},
                                  {"cond_ii_sign", dec(w.cond_ii_sign)}});
    emit(doc);
  } else {
    std::cout << verdict_word;
    if (verdict.gcd_gate_failed) std::cout << " (gcd(c, d) > 1)";
    std::cout << "\n";
    for (const auto& w : verdict.witnesses)
      std::cout << "  witness: series=" << k3corr::series_name(w.series)
                << " alpha=" << (w.alpha > 0 ? "+1" : "-1") << " (p, q)=(" << dec(w.p) << ", "
                << dec(w.q) << ") associated=(" << dec(w.associated.x) << ", "
                << dec(w.associated.y) << ")\n";
  }
  return verdict.yes ? exit_yes : exit_no;
}

struct DivArgs {
  std::string r, s;
  std::string q_max = "4";
  std::string d_max = "10000";
  std::string format = "text";
};

int run_div(const DivArgs& args) {
  const auto shape = k3corr::mukai_split(parse_int(args.r), parse_int(args.s));
  const k3corr::divisorial::CatalogueLimits limits{parse_int(args.q_max), parse_int(args.d_max)};
  const auto cat = k3corr::divisorial::div_catalogue(shape, limits);
  const auto& cert = cat.certificate;
  if (args.format == "csv") {
    std::cout << "d,mu1,mu2,series,alpha,q,t,p,qwit\n";
    for (const auto& row : cat.rows)
      std::cout << dec(row.d) << "," << dec(row.mu_bar.first) << "," << dec(row.mu_bar.second)
                << "," << k3corr::series_name(row.series) << "," << dec(row.alpha) << ","
                << dec(row.q) << "," << dec(row.t) << "," << dec(row.wit_p) << ","
                << dec(row.wit_q) << "\n";
  } else if (args.format == "json") {
    json doc;
    doc["tool_version"] = k3corr::version_string;
    doc["command"] = "div";
    doc["params"] = {{"r", args.r}, {"s", args.s}, {"q_max", dec(limits.q_max)},
                     {"d_max", dec(limits.d_max)}};
    doc["header"] = {{"r", dec(shape.r)},
                     {"s", dec(shape.s)},
                     {"c", dec(shape.c)},
                     {"a", dec(shape.a)},
                     {"b", dec(shape.b)},
                     {"nonempty_certificate",
                      json{{"route", cert.route},
                           {"series", k3corr::series_name(cert.series)},
                           {"alpha", dec(cert.alpha)},
                           {"theta", dec(cert.theta)},
                           {"mu", dec(cert.mu)},
                           {"t", dec(cert.t)},
                           {"d_example", dec(cert.d_example)},
                           {"wit_p", dec(cert.wit_p)},
                           {"wit_q", dec(cert.wit_q)}}}};
    doc["rows"] = json::array();
    for (const auto& row : cat.rows)
      doc["rows"].push_back({{"d", dec(row.d)},
                             {"mu1", dec(row.mu_bar.first)},
                             {"mu2", dec(row.mu_bar.second)},
                             {"series", k3corr::series_name(row.series)},
                             {"alpha", dec(row.alpha)},
                             {"q", dec(row.q)},
                             {"t", dec(row.t)},
                             {"p", dec(row.wit_p)},
                             {"qwit", dec(row.wit_q)}});
    emit(doc);
  } else {
    std::cout << "shape: r=" << dec(shape.r) << " s=" << dec(shape.s) << " c=" << dec(shape.c)
              << " a=" << dec(shape.a) << " b=" << dec(shape.b) << "\n";
    std::cout << "certificate: route=" << cert.route << " series="
              << k3corr::series_name(cert.series) << " alpha=" << (cert.alpha > 0 ? "+1" : "-1")
              << " mu=" << dec(cert.mu) << " t=" << dec(cert.t)
              << " d_example=" << dec(cert.d_example) << " witness=(" << dec(cert.wit_p) << ", "
              << dec(cert.wit_q) << ")\n";
    std::cout << "rows (" << cat.rows.size() << "):\n";
    for (const auto& row : cat.rows)
      std::cout << "  d=" << dec(row.d) << " mu_bar={" << dec(row.mu_bar.first) << ", "
                << dec(row.mu_bar.second) << "} series=" << k3corr::series_name(row.series)
                << " alpha=" << (row.alpha > 0 ? "+1" : "-1") << " q=" << dec(row.q)
                << " t=" << dec(row.t) << " witness=(" << dec(row.wit_p) << ", "
                << dec(row.wit_q) << ")\n";
  }
  return exit_yes;
}

struct PellArgs {
  std::string d, n;
  std::string q_bound = "10000";
  std::string format = "text";
};

int run_pell(const PellArgs& args) {
  const Int d = parse_int(args.d);
  const Int n = parse_int(args.n);
  const Int q_bound = parse_int(args.q_bound);
  const auto sols = k3corr::pell::solve_bounded(d, n, q_bound);
  const bool square = k3corr::is_perfect_square(d);
  if (args.format == "json") {
    json doc;
    doc["tool_version"] = k3corr::version_string;
    doc["command"] = "pell";
    doc["params"] = {{"d", dec(d)}, {"N", dec(n)}, {"q_bound", dec(q_bound)}};
    if (!square && d > 1) {
      const auto fu = k3corr::pell::fundamental_unit(d);
      doc["fundamental_unit"] = {{"u", dec(fu.u)}, {"v", dec(fu.v)}};
    }
    doc["solutions"] = json::array();
    for (const auto& sol : sols)
      doc["solutions"].push_back({{"p", dec(sol.p)}, {"q", dec(sol.q)}});
    emit(doc);
  } else {
    if (!square && d > 1) {
      const auto fu = k3corr::pell::fundamental_unit(d);
      std::cout << "fundamental unit: (u, v) = (" << dec(fu.u) << ", " << dec(fu.v) << ")\n";
    }
    if (sols.empty()) {
      std::cout << "no solutions with |q| <= " << dec(q_bound) << "\n";
    } else {
      std::cout << "solutions (" << sols.size() << "):\n";
      for (const auto& sol : sols)
        std::cout << "  (p, q) = (" << dec(sol.p) << ", " << dec(sol.q) << ")\n";
    }
  }
  return sols.empty() ? exit_no : exit_yes;
}

int run_selftest(const std::string& scale, const std::string& format) {
  const auto results = k3corr::selftest::run_all(scale == "full");
  bool all = true;
  if (format == "json") {
    json doc;
    doc["tool_version"] = k3corr::version_string;
    doc["command"] = "selftest";
    doc["params"] = {{"scale", scale}};
    doc["results"] = json::array();
    for (const auto& res : results) {
      all = all && res.pass;
      doc["results"].push_back({{"name", res.name},
                                {"pass", res.pass},
                                {"seconds", res.seconds},
                                {"detail", res.detail}});
    }
    emit(doc);
  } else {
    for (const auto& res : results) {
      all = all && res.pass;
      std::printf("[%s] %-22s (%.2fs) %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                  res.seconds, res.detail.c_str());
    }
  }
  return all ? exit_yes : exit_no;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-side correspondence checks for moduli of sheaves on K3 surfaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", k3corr::version_string);

  auto format_check = CLI::IsMember({"text", "json"});
  auto div_format_check = CLI::IsMember({"text", "json", "csv"});

  CheckXArgs cx;
  auto* check_x = app.add_subcommand("check-x", "Decide the surface-side criterion for (r, s, d, mu)");
  check_x->add_option("r", cx.r, "rank factor r")->required();
  check_x->add_option("s", cx.s, "factor s")->required();
  check_x->add_option("d", cx.d, "determinant d")->required();
  check_x->add_option("mu", cx.mu, "residue mu mod 2rs")->required();
  check_x->add_option("--q-bound", cx.q_bound, "search bound on q (default 10000)");
  check_x->add_option("--format", cx.format, "text or json")->check(format_check);

  CheckYArgs cy;
  auto* check_y = app.add_subcommand("check-y", "Decide the moduli-side self criterion for (a, b, c, d, nu)");
  check_y->add_option("a", cy.a, "factor a")->required();
  check_y->add_option("b", cy.b, "factor b")->required();
  check_y->add_option("c", cy.c, "common factor c")->required();
  check_y->add_option("d", cy.d, "determinant d")->required();
  check_y->add_option("nu", cy.nu, "residue nu mod 2ab")->required();
  check_y->add_option("--q-bound", cy.q_bound, "search bound on q (default 10000)");
  check_y->add_option("--format", cy.format, "text or json")->check(format_check);

  DivArgs dv;
  auto* div = app.add_subcommand("div", "Enumerate the divisorial catalogue for (r, s)");
  div->add_option("r", dv.r, "rank factor r")->required();
  div->add_option("s", dv.s, "factor s")->required();
  div->add_option("--q-max", dv.q_max, "largest witness q (default 4)");
  div->add_option("--d-max", dv.d_max, "largest d (default 10000)");
  div->add_option("--format", dv.format, "text, json or csv")->check(div_format_check);

  PellArgs pl;
  auto* pell_cmd = app.add_subcommand("pell", "Solve p^2 - d*q^2 = N within a bound");
  pell_cmd->add_option("d", pl.d, "discriminant d")->required();
  pell_cmd->add_option("N", pl.n, "right-hand side N")->required();
  pell_cmd->add_option("--q-bound", pl.q_bound, "search bound on q (default 10000)");
  pell_cmd->add_option("--format", pl.format, "text or json")->check(format_check);

  std::string st_scale = "small";
  std::string st_format = "text";
  auto* selftest = app.add_subcommand("selftest", "Run the library's property suite");
  selftest->add_option("--scale", st_scale, "small or full")->check(CLI::IsMember({"small", "full"}));
  selftest->add_option("--format", st_format, "text or json")->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_invalid;
  }

  try {
    if (check_x->parsed()) return run_check_x(cx);
    if (check_y->parsed()) return run_check_y(cy);
    if (div->parsed()) return run_div(dv);
    if (pell_cmd->parsed()) return run_pell(pl);
    if (selftest->parsed()) return run_selftest(st_scale, st_format);
  } catch (const k3corr::k3_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
