#include "ekit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <utility>

#include "ekit/block_text.hpp"
#include "ekit/building_blocks.hpp"
#include "ekit/circle_match.hpp"
#include "ekit/eigen_lift.hpp"
#include "ekit/error.hpp"
#include "ekit/hom_calculus.hpp"
#include "ekit/k_invariants.hpp"
#include "ekit/realize.hpp"

namespace ekit {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json ok_response(json data) {
  return json{{"schemaVersion", 1}, {"status", "ok"}, {"data", std::move(data)}};
}

json error_response(const std::string& code, const std::string& message,
                    const std::optional<std::string>& failed_condition) {
  json err{{"code", code}, {"message", message}};
  if (failed_condition) err["failedCondition"] = *failed_condition;
  return json{{"schemaVersion", 1}, {"status", "error"}, {"error", std::move(err)}};
}

json js_int_vec(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_string(x));
  return out;
}

json js_rat_vec(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

json js_mat(const IMat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_string(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json parse_json_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError,
                std::string(what) + ": " + e.what());
  }
}

Int element_to_int(const json& el, const char* what) {
  Int v;
  if (el.is_string() && parse_int(el.get<std::string>(), v)) return v;
  if (el.is_number_integer() && parse_int(el.dump(), v)) return v;
  throw Error(ErrorCode::ParseError,
              std::string(what) + ": expected an integer (as string or literal), got " +
                  el.dump());
}

Rat element_to_rat(const json& el, const char* what) {
  Rat v;
  if (el.is_string() && parse_rat(el.get<std::string>(), v)) return v;
  if (el.is_number_integer() && parse_rat(el.dump(), v)) return v;
  throw Error(ErrorCode::ParseError,
              std::string(what) + ": expected a rational \"p/q\" string, got " +
                  el.dump());
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
  const json j = parse_json_text(text, what);
  if (!j.is_array()) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected a JSON array");
  }
  std::vector<Int> out;
  for (const json& el : j) out.push_back(element_to_int(el, what));
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text, const char* what) {
  const json j = parse_json_text(text, what);
  if (!j.is_array()) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected a JSON array");
  }
  std::vector<Rat> out;
  for (const json& el : j) out.push_back(element_to_rat(el, what));
  return out;
}

IMat parse_matrix(const std::string& text, const char* what) {
  const json j = parse_json_text(text, what);
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
    throw Error(ErrorCode::ParseError,
                std::string(what) + ": expected a nonempty JSON array of rows");
  }
  const std::size_t cols = j[0].size();
  IMat m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorCode::ParseError,
                  std::string(what) + ": rows must all have equal length");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = element_to_int(j[r][c], what);
  }
  return m;
}

json cmd_invariants(const std::string& block_text) {
  const CircleBlock b = parse_block(block_text);
  const BlockConstants c = block_constants(b);
  const K0Data k0 = k0_data(b);
  const K1Structure k1 = k1_structure(b);

  json torsion = json::array();
  json generators = json::array();
  for (std::size_t i = 0; i < k1.r.size(); ++i) {
    if (k1.r[i] == 1) continue;  // trivial summand
    torsion.push_back(int_to_string(k1.r[i]));
    generators.push_back(js_int_vec(k1.torsion_generator_coeffs[i]));
  }

  return json{
      {"block", format_block(b)},
      {"constants",
       {{"d", int_to_string(c.d)},
        {"s", int_to_string(c.s)},
        {"projectionless", c.projectionless}}},
      {"k0",
       {{"orderUnit", int_to_string(k0.order_unit)},
        {"rhoGenerator", rat_to_string(k0.rho_image_generator)}}},
      {"k1",
       {{"freeRank", int_to_string(k1.group.free_rank)},
        {"torsion", std::move(torsion)},
        {"generators", std::move(generators)},
        {"freeGenerator", js_int_vec(k1.free_generator_coeff)}}}};
}

json recipe_to_json(const HomRecipe& r) {
  return json{{"smallRemainders", js_int_vec(r.small_remainders)},
              {"eigenvalueCounts", js_mat(r.eigenvalue_counts)},
              {"patternLength", int_to_string(r.pattern_length)},
              {"k1Twist", js_int_vec(r.k1_twist)},
              {"twistSlot", "x_N"}};
}

json cmd_hom_exists(const std::string& from, const std::string& to,
                    const std::string& h_text, const std::string& chi_text) {
  const CircleBlock a = parse_block(from);
  const CircleBlock b = parse_block(to);
  const IMat raw = parse_matrix(h_text, "--h");
  std::vector<Int> chi;
  if (!chi_text.empty()) chi = parse_int_list(chi_text, "--chi");

  const KDualHom sf = standard_form(raw, a, b);
  const KKClass kk{sf, chi};

  json data{{"standardForm", js_mat(sf.h)}};
  // the size gate is the theorem's applicability hypothesis; report it first
  const Int s_b = block_constants(b).s;
  const Int need = Int(a.N()) * a.n;
  if (s_b < need) {
    data["exists"] = false;
    data["reason"] = "s(B) >= Nn fails (" + int_to_string(s_b) + " < " +
                     int_to_string(need) + ")";
    return data;
  }
  if (!validate_kdual_hom(sf)) {
    data["exists"] = false;
    data["reason"] = "standard-form equations fail";
    return data;
  }
  if (!unital_check(sf)) {
    data["exists"] = false;
    data["reason"] = "unitality fails (sum_i h_ji d_i != e_j)";
    return data;
  }
  data["exists"] = true;
  data["recipe"] = recipe_to_json(build_hom_recipe(a, b, kk));
  return data;
}

json cmd_match(const std::string& a_text, const std::string& b_text,
               const std::string& hall_text) {
  const CircleMultiset a = make_circle_multiset(parse_rat_list(a_text, "--a"));
  const CircleMultiset b = make_circle_multiset(parse_rat_list(b_text, "--b"));
  const RlResult r = rl_distance(a, b);
  json data{{"distance", rat_to_string(r.distance)},
            {"optimalShift", int_to_string(r.shift)}};
  if (!hall_text.empty()) {
    const std::size_t comma = hall_text.find(',');
    Int k;
    Rat eps;
    if (comma == std::string::npos ||
        !parse_int(hall_text.substr(0, comma), k) ||
        !parse_rat(hall_text.substr(comma + 1), eps)) {
      throw Error(ErrorCode::ParseError, "--hall expects \"k,epsilon\"");
    }
    const HallResult hr = hall_bound_check(a, b, k, eps);
    json hall{{"holds", hr.holds}, {"bound", rat_to_string(hr.bound)}};
    if (hr.failing_arc) {
      hall["failingArc"] = json{{"k", int_to_string(hr.failing_arc->k)},
                                {"lo", int_to_string(hr.failing_arc->lo)},
                                {"hi", int_to_string(hr.failing_arc->hi)},
                                {"dilation", rat_to_string(hr.failing_arc->dilation)},
                                {"aCount", hr.a_count},
                                {"bCount", hr.b_count}};
    }
    data["hall"] = std::move(hall);
  }
  return data;
}

json cmd_realize(const std::string& torsion_text, const std::string& min_rep_text) {
  std::vector<std::pair<Int, Int>> powers;
  std::size_t pos = 0;
  while (pos < torsion_text.size()) {
    std::size_t end = torsion_text.find(',', pos);
    if (end == std::string::npos) end = torsion_text.size();
    std::string item = torsion_text.substr(pos, end - pos);
    // trim spaces
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) {
      const std::size_t caret = item.find('^');
      Int p, e(1);
      const std::string p_text =
          caret == std::string::npos ? item : item.substr(0, caret);
      if (!parse_int(p_text, p) ||
          (caret != std::string::npos && !parse_int(item.substr(caret + 1), e))) {
        throw Error(ErrorCode::ParseError,
                    "--torsion expects entries like \"2\" or \"2^3\", got \"" +
                        item + "\"");
      }
      powers.emplace_back(p, e);
    }
    pos = end + 1;
  }
  Int k;
  if (!parse_int(min_rep_text, k)) {
    throw Error(ErrorCode::ParseError, "--min-rep expects an integer");
  }
  const CircleBlock blk = realize_k1(make_torsion_spec(std::move(powers)), k);
  return json{{"block", format_block(blk)},
              {"n", int_to_string(blk.n)},
              {"divisors", js_int_vec(blk.divisors)}};
}

json cmd_lift(const std::string& paths_text, const std::string& k_text) {
  const json j = parse_json_text(paths_text, "--paths");
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::ParseError, "--paths: expected a nonempty JSON array");
  }
  std::vector<SampledPath> paths;
  for (const json& el : j) {
    if (!el.is_object() || !el.contains("grid") || !el.contains("values")) {
      throw Error(ErrorCode::ParseError,
                  "--paths: each path needs \"grid\" and \"values\"");
    }
    std::vector<Rat> grid, values;
    for (const json& g : el["grid"]) grid.push_back(element_to_rat(g, "--paths"));
    for (const json& v : el["values"]) values.push_back(element_to_rat(v, "--paths"));
    paths.push_back(make_sampled_path(std::move(grid), std::move(values)));
  }
  Int k;
  if (!parse_int(k_text, k)) {
    throw Error(ErrorCode::ParseError, "--k expects an integer");
  }
  const OrderedLiftFamily fam = lift_paths(paths, k);
  json lifts = json::array();
  for (const std::vector<Rat>& chain : fam.lifts) lifts.push_back(js_rat_vec(chain));
  return json{{"grid", js_rat_vec(fam.grid)}, {"lifts", std::move(lifts)}};
}

json cmd_ex1(const std::string& from, const std::string& to,
             const std::string& h_text, const std::string& chi_text,
             const std::string& c_text, const std::string& eps_text) {
  const CircleBlock a = parse_block(from);
  const CircleBlock b = parse_block(to);
  const IMat raw = parse_matrix(h_text, "--h");
  std::vector<Int> chi;
  if (!chi_text.empty()) chi = parse_int_list(chi_text, "--chi");
  Int c_const;
  Rat eps;
  if (!parse_int(c_text, c_const)) {
    throw Error(ErrorCode::ParseError, "--C expects an integer");
  }
  if (!parse_rat(eps_text, eps)) {
    throw Error(ErrorCode::ParseError, "--epsilon expects a rational");
  }
  const KDualHom sf = standard_form(raw, a, b);
  const Ex1Bookkeeping bk = ex1_bookkeeping(a, b, KKClass{sf, chi}, c_const, eps);
  return json{{"hJNo", js_int_vec(bk.h_jn_o)},   {"rJ", js_int_vec(bk.r_j)},
              {"kJ", js_int_vec(bk.k_j)},        {"uJ", js_int_vec(bk.u_j)},
              {"b", int_to_string(bk.b)},        {"patternLength",
                                                  int_to_string(bk.pattern_length)},
              {"slack", rat_to_string(bk.slack)}};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"exact K-theoretic invariants and matching for circle building blocks",
               "elliott-kit"};
  // long-only help: --h is a real option of hom-exists and ex1-bookkeeping
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  std::string block_arg;
  CLI::App* inv = app.add_subcommand("invariants", "K0/K1 data of a block");
  inv->add_option("block", block_arg, "A(n;d1,...,dN)[@(t1,...,tN)]")->required();

  std::string he_from, he_to, he_h, he_chi;
  CLI::App* he = app.add_subcommand("hom-exists",
                                    "existence and recipe for a unital homomorphism");
  he->add_option("--from", he_from, "source block A")->required();
  he->add_option("--to", he_to, "target block B")->required();
  he->add_option("--h", he_h, "M x N matrix, JSON rows")->required();
  he->add_option("--chi", he_chi, "K1 twist vector, JSON");

  std::string ma_a, ma_b, ma_hall;
  CLI::App* ma = app.add_subcommand("match", "R_L distance between circle multisets");
  ma->add_option("--a", ma_a, "first multiset, JSON array of rationals")->required();
  ma->add_option("--b", ma_b, "second multiset, JSON array of rationals")->required();
  ma->add_option("--hall", ma_hall, "k,epsilon for the arc-counting bound");

  std::string rk_torsion, rk_minrep;
  CLI::App* rk = app.add_subcommand("realize-k1",
                                    "projectionless block with prescribed K1 torsion");
  rk->add_option("--torsion", rk_torsion, "comma list of prime powers, e.g. 2^2,3");
  rk->add_option("--min-rep", rk_minrep, "lower bound K on s(A)")->required();

  std::string li_paths, li_k;
  CLI::App* li = app.add_subcommand("lift", "ordered continuous lifts of circle paths");
  li->add_option("--paths", li_paths, "JSON array of {grid, values}")->required();
  li->add_option("--k", li_k, "window: sum of lifts at 0 lies in [k, k+1)")
      ->required();

  std::string ex_from, ex_to, ex_h, ex_chi, ex_c, ex_eps;
  CLI::App* ex = app.add_subcommand("ex1-bookkeeping",
                                    "integer bookkeeping of the existence theorem");
  ex->add_option("--from", ex_from, "source block A")->required();
  ex->add_option("--to", ex_to, "target block B")->required();
  ex->add_option("--h", ex_h, "M x N matrix, JSON rows")->required();
  ex->add_option("--chi", ex_chi, "K1 twist vector, JSON");
  ex->add_option("--C", ex_c, "number of prescribed eigenvalue functions")->required();
  ex->add_option("--epsilon", ex_eps, "trace tolerance, rational")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::CallForHelp&) {
    return CommandResult{0, app.help()};
  } catch (const CLI::ParseError& e) {
    return CommandResult{
        1, dump(error_response("ParseError", e.what(), std::nullopt))};
  }

  try {
    json data;
    if (inv->parsed()) {
      data = cmd_invariants(block_arg);
    } else if (he->parsed()) {
      data = cmd_hom_exists(he_from, he_to, he_h, he_chi);
    } else if (ma->parsed()) {
      data = cmd_match(ma_a, ma_b, ma_hall);
    } else if (rk->parsed()) {
      data = cmd_realize(rk_torsion, rk_minrep);
    } else if (li->parsed()) {
      data = cmd_lift(li_paths, li_k);
    } else {
      data = cmd_ex1(ex_from, ex_to, ex_h, ex_chi, ex_c, ex_eps);
    }
    return CommandResult{0, dump(ok_response(std::move(data)))};
  } catch (const Error& e) {
    return CommandResult{1, dump(error_response(to_string(e.code()), e.what(),
                                                e.failed_condition()))};
  } catch (const std::exception& e) {
    return CommandResult{
        1, dump(error_response("InternalError", e.what(), std::nullopt))};
  }
}

}  // namespace ekit
