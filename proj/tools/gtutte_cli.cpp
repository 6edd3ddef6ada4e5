#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include "CLI11.hpp"

#include "gtutte/gtutte.hpp"

using namespace gtutte;

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 cap exceeded.
constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_input_error = 2;
constexpr int exit_cap_exceeded = 3;

std::pair<FgAbelianGroup, ElementList> load_pair(const std::string& path, bool graph) {
  if (graph) return graph_to_list(parse_graph(read_file(path)));
  const Instance inst = parse_instance(read_file(path));
  return {inst.require_group(), inst.require_list()};
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw parse_error("output", "cannot open '" + out_path + "'");
  out << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact chromatic quasi-polynomials and G-Tutte polynomials for "
               "finite lists in finitely generated abelian groups"};
  app.require_subcommand(1);

  std::size_t subset_cap = default_subset_cap;
  std::int64_t enum_cap_i = 10000000;
  app.add_option("--subset-cap", subset_cap,
                 "largest list size the subset expansion will attempt")
      ->capture_default_str();
  app.add_option("--enum-cap", enum_cap_i,
                 "largest candidate count the brute-force oracle will walk")
      ->capture_default_str();

  std::string in_path, out_path, g_text, expect_path, to_kind;
  bool graph = false, latex = false, check = false;
  std::int64_t qmax = 24;

  auto add_input = [&](CLI::App* cmd, bool allow_graph = true) {
    cmd->fallthrough();  // let --subset-cap / --enum-cap follow the subcommand
    cmd->add_option("input", in_path, "instance file")->required();
    if (allow_graph)
      cmd->add_flag("--graph", graph, "treat the input as a graph edge list");
  };

  CLI::App* chromatic =
      app.add_subcommand("chromatic", "chromatic quasi-polynomial of a pair");
  add_input(chromatic);
  chromatic->add_flag("--latex", latex, "also emit a LaTeX cases display");

  CLI::App* tutte = app.add_subcommand("tutte", "G-Tutte polynomial of a pair");
  add_input(tutte);
  tutte->add_option("--g", g_text, "coefficient group: k:<int>, Z, or QZ")->required();

  CLI::App* charpoly =
      app.add_subcommand("charpoly", "G-characteristic polynomial of a pair");
  add_input(charpoly);
  charpoly->add_option("--g", g_text, "coefficient group: k:<int>, Z, or QZ")->required();

  CLI::App* realcp = app.add_subcommand(
      "real-charpoly",
      "characteristic polynomial of the attached real hyperplane arrangement");
  add_input(realcp);

  CLI::App* period = app.add_subcommand("period", "lcm period of a pair");
  add_input(period);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the quasi-polynomial against brute-force counts");
  add_input(verify_cmd);
  verify_cmd->add_option("--qmax", qmax, "check arguments 1..qmax")
      ->capture_default_str();
  verify_cmd->add_option("--expect", expect_path,
                         "JSON file the computed quasi-polynomial must equal");

  CLI::App* convert = app.add_subcommand("convert", "convert between instance kinds");
  add_input(convert, /*allow_graph=*/false);
  convert->add_option("--to", to_kind, "target kind: cw or bm")
      ->required()
      ->check(CLI::IsMember({"cw", "bm"}));
  convert->add_flag("--check", check, "assert equal oracle counts after converting");
  convert->add_option("--qmax", qmax, "moduli checked with --check")
      ->capture_default_str();
  convert->add_option("-o,--output", out_path, "write the converted instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  const Int enum_cap(enum_cap_i);
  try {
    if (chromatic->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      const QuasiPolynomial f = chromatic_quasi(gamma, a, subset_cap);
      Json j = quasipoly_to_json(f);
      if (latex) j["latex"] = quasipoly_latex(f);
      write_output(out_path, dump_json(j));
    } else if (tutte->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      const GSpec g = GSpec::parse(g_text);
      write_output(out_path, dump_json(bivar_to_json(g_tutte(gamma, a, g, subset_cap))));
    } else if (charpoly->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      const GSpec g = GSpec::parse(g_text);
      write_output(out_path, dump_json(poly_to_json(g_char_poly(gamma, a, g, subset_cap))));
    } else if (realcp->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      write_output(out_path, dump_json(poly_to_json(real_char_poly(gamma, a, subset_cap))));
    } else if (period->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      Json j;
      j["period"] = to_int64(lcm_period(gamma, a, subset_cap));
      write_output(out_path, dump_json(j));
    } else if (verify_cmd->parsed()) {
      const auto [gamma, a] = load_pair(in_path, graph);
      const VerifyReport rep = verify(gamma, a, Int(qmax), subset_cap, enum_cap);
      std::cout << rep.str();
      bool ok = rep.all_pass;

      const QuasiPolynomial f = chromatic_quasi(gamma, a, subset_cap);
      const bool dc_ok = same_function(f, chromatic_quasi_dc(gamma, a, subset_cap));
      std::cout << "dc " << (dc_ok ? "PASS" : "FAIL") << "\n";
      ok = ok && dc_ok;

      const bool gcd_ok = has_gcd_property(chromatic_quasi_full(gamma, a, subset_cap));
      std::cout << "gcd " << (gcd_ok ? "PASS" : "FAIL") << "\n";
      ok = ok && gcd_ok;

      if (!expect_path.empty()) {
        const nlohmann::json want = nlohmann::json::parse(read_file(expect_path));
        const nlohmann::json got =
            nlohmann::json::parse(quasipoly_to_json(f).dump());
        const bool expect_ok = want == got;
        std::cout << "expect " << (expect_ok ? "PASS" : "FAIL") << "\n";
        ok = ok && expect_ok;
      }
      return ok ? exit_ok : exit_verify_failed;
    } else if (convert->parsed()) {
      const Instance inst = parse_instance(read_file(in_path));
      if (to_kind == "cw") {
        const FgAbelianGroup& gamma = inst.require_group();
        const ElementList& a = inst.require_list();
        const auto [cw, lifting] = bm_to_cw(gamma, a);
        if (check) {
          for (Int q = 1; q <= qmax; ++q)
            if (bm_count(gamma, a, q, enum_cap) != cw_count(cw, q, enum_cap)) {
              std::cerr << "count mismatch at q=" << q.get_str() << "\n";
              return exit_verify_failed;
            }
        }
        write_output(out_path, dump_json(cw_to_json(cw)));
      } else {
        const CwInstance& cw = inst.require_cw();
        const auto [gamma, a] = cw_to_bm(cw);
        if (check) {
          for (Int q = 1; q <= qmax; ++q)
            if (bm_count(gamma, a, q, enum_cap) != cw_count(cw, q, enum_cap)) {
              std::cerr << "count mismatch at q=" << q.get_str() << "\n";
              return exit_verify_failed;
            }
        }
        write_output(out_path, dump_json(pair_to_json(gamma, a)));
      }
    }
  } catch (const parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return exit_cap_exceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input_error;
  }
  return exit_ok;
}
