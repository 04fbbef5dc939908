// jset: command-line front end for the Jacobi-subset library.
//
// Exit codes: 0 the checked property holds, 1 it fails, 2 usage, parse or
// cap errors.

#include "jset/jset.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace jset;
using nlohmann::json;

namespace {

constexpr std::size_t emit_cap = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string &path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::optional<std::size_t> degree_opt(std::size_t d) {
  return d == 0 ? std::nullopt : std::optional<std::size_t>(d);
}

void print_json(const json &j) { std::cout << j.dump(2) << '\n'; }

void print_report_text(const Report &rep, bool timing) {
  std::cout << rep.subject << '\n';
  for (const auto &c : rep.claims) {
    std::cout << "  " << (c.status == ClaimStatus::verified ? "verified " : "FALSIFIED ")
              << c.name;
    if (!c.witness.is_null())
      std::cout << "  " << c.witness.dump();
    if (timing)
      std::cout << "  (" << c.millis << " ms)";
    std::cout << '\n';
  }
  for (const auto &[key, value] : rep.findings.items())
    std::cout << "  finding " << key << ": " << value.dump() << '\n';
  for (const auto &note : rep.notes)
    std::cout << "  note: " << note << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Jacobi subsets of symmetric groups: construct, check, count, decompose"};
  app.require_subcommand(1);

  std::string format = "text";
  bool timing = false;
  auto add_format = [&](CLI::App *sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
  };

  // emit-identity
  std::size_t k = 0, l = 0, n = 0;
  auto *emit = app.add_subcommand("emit-identity", "print the identity of T_{k,l,n}");
  emit->add_option("--k", k)->required();
  emit->add_option("--l", l)->required();
  emit->add_option("--n", n)->required();
  add_format(emit, {"text", "latex", "json"});

  // check
  std::string input;
  bool mod2 = false;
  std::size_t degree = 0;
  auto *check = app.add_subcommand("check", "test whether a set of permutations is Jacobi");
  check->add_flag("--mod2", mod2, "test the 2-Jacobi property instead");
  check->add_option("--degree", degree, "degree of the permutations (for cycle input)");
  check->add_option("file", input, "input file or - for stdin")->required();
  add_format(check, {"text", "json"});

  // verify-theorem2
  std::size_t lattice_max = lattice_check_cap;
  auto *verify = app.add_subcommand("verify-theorem2", "verify the kernel basis sigma*T_{k,1,n}");
  verify->add_option("--n", n)->required();
  verify->add_option("--lattice-max", lattice_max, "largest n for the integer span check");
  verify->add_flag("--timing", timing);
  add_format(verify, {"text", "json"});

  // kernel
  auto *kernel = app.add_subcommand("kernel", "kernel ranks of beta_n and the basis sets");
  kernel->add_option("--n", n)->required();
  add_format(kernel, {"text", "json"});

  // count
  auto *count = app.add_subcommand("count", "count Jacobi (or 2-Jacobi) subsets of S_n");
  count->add_option("--n", n)->required();
  count->add_flag("--mod2", mod2);
  count->add_flag("--timing", timing);
  add_format(count, {"text", "json"});

  // decompose
  auto *decompose = app.add_subcommand("decompose", "write a 2-Jacobi set over the kernel basis");
  decompose->add_option("file", input)->required();
  decompose->add_option("--degree", degree);
  add_format(decompose, {"text", "json"});

  // cover-check
  auto *cover = app.add_subcommand("cover-check",
                                   "search a disjoint cover by translated T_{k,l,n}");
  cover->add_option("file", input)->required();
  cover->add_option("--degree", degree);
  add_format(cover, {"text", "json"});

  // expand
  std::string perm_text, method = "recursive";
  auto *expand = app.add_subcommand("expand", "expand a left-normed bracket");
  expand->add_option("--perm", perm_text)->required();
  expand->add_option("--method", method)->check(CLI::IsMember({"recursive", "shuffle"}));
  add_format(expand, {"text", "json"});

  // matrix
  auto *matrix = app.add_subcommand("matrix", "print the matrix of beta_n");
  matrix->add_option("--n", n)->required();
  matrix->add_flag("--mod2", mod2);

  // theta
  auto *theta_cmd = app.add_subcommand("theta", "kernel checks for theta_{j,n}");
  theta_cmd->add_option("--n", n)->required();
  add_format(theta_cmd, {"text", "json"});

  // closure
  std::size_t trials = 50;
  std::uint64_t seed = 20240601;
  auto *closure = app.add_subcommand("closure", "randomized checks of the closure rules");
  closure->add_option("--n", n)->required();
  closure->add_option("--trials", trials);
  closure->add_option("--seed", seed);
  add_format(closure, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  const bool as_json = format == "json";
  try {
    if (*emit) {
      if (n > emit_cap)
        throw CapExceeded("emit-identity: n must be at most " + std::to_string(emit_cap));
      const PermSet T = build_T(k, l, n);
      if (as_json)
        print_json({{"k", k}, {"l", l}, {"n", n}, {"permutations", perm_set_to_json(T)}});
      else if (format == "latex")
        std::cout << latex_identity(T) << '\n';
      else
        std::cout << format_identity(T, IdentityStyle::text) << '\n';
      return 0;
    }

    if (*check) {
      const PermSet T = parse_perm_set(read_input(input), degree_opt(degree));
      const auto residual = mod2 ? jacobi_residual_mod2(T) : jacobi_residual(T);
      const bool holds = residual.is_zero();
      if (as_json) {
        json j{{"property", mod2 ? "2-jacobi" : "jacobi"},
               {"degree", T.degree()},
               {"size", T.size()},
               {"holds", holds}};
        if (!holds)
          j["residual"] = to_json(residual);
        print_json(j);
      } else {
        std::cout << (mod2 ? "2-Jacobi: " : "Jacobi: ") << (holds ? "yes" : "no") << '\n';
        if (!holds)
          std::cout << "residual" << (mod2 ? " mod 2" : "") << ": " << to_text(residual) << '\n';
      }
      return holds ? 0 : 1;
    }

    if (*verify) {
      const Report rep = verify_theorem2(n, lattice_max);
      if (as_json)
        print_json(rep.to_json(timing));
      else
        print_report_text(rep, timing);
      return rep.all_verified() ? 0 : 1;
    }

    if (*kernel) {
      if (n < 2 || n > verify_cap)
        throw CapExceeded("kernel: need 2 <= n <= " + std::to_string(verify_cap));
      const std::size_t N = factorial(n);
      const auto rank_q = int_rank(build_beta_matrix(n));
      const auto rank_2 = gf2_rank(build_beta_matrix_gf2(n));
      const auto basis = theorem2_basis(n);
      if (as_json) {
        json b = json::array();
        for (const auto &e : basis)
          b.push_back(to_json(e));
        print_json({{"n", n},
                    {"kernel_rank_rational", N - rank_q},
                    {"kernel_rank_gf2", N - rank_2},
                    {"basis", b}});
      } else {
        std::cout << "n = " << n << '\n'
                  << "kernel rank over Q: " << N - rank_q << '\n'
                  << "kernel rank over GF(2): " << N - rank_2 << '\n'
                  << "basis sets sigma*T_{k,1,n} (" << basis.size() << "):\n";
        for (const auto &e : basis)
          std::cout << "  k=" << e.k << " sigma=" << format_one_line(e.sigma) << '\n';
      }
      return 0;
    }

    if (*count) {
      const auto start = std::chrono::steady_clock::now();
      json j{{"n", n}, {"property", mod2 ? "2-jacobi" : "jacobi"}};
      std::string text;
      if (mod2) {
        const auto c = enumerate_2jacobi(n);
        j["count"] = integer_to_json(c.count);
        j["kernel_dimension"] = c.kernel_dimension;
        if (c.exhaustive)
          j["exhaustive_count"] = *c.exhaustive;
        text = c.count.str();
      } else {
        const auto c = enumerate_jacobi(n);
        j["count"] = c.count;
        text = std::to_string(c.count);
      }
      const double ms = elapsed_ms(start);
      if (timing)
        j["millis"] = ms;
      if (as_json) {
        print_json(j);
      } else {
        std::cout << text << '\n';
        if (timing)
          std::cerr << "elapsed: " << ms << " ms\n";
      }
      return 0;
    }

    if (*decompose) {
      const PermSet T = parse_perm_set(read_input(input), degree_opt(degree));
      std::vector<BasisElement> parts;
      try {
        parts = decompose_2jacobi(T);
      } catch (const NotTwoJacobi &e) {
        if (as_json)
          print_json({{"two_jacobi", false}, {"residual", to_json(e.residual())}});
        else
          std::cout << "not 2-Jacobi; residual mod 2: " << to_text(e.residual()) << '\n';
        return 1;
      }
      if (as_json) {
        json arr = json::array();
        for (const auto &p : parts)
          arr.push_back(to_json(p));
        print_json({{"two_jacobi", true}, {"degree", T.degree()}, {"parts", arr}});
      } else {
        std::cout << "symmetric difference of " << parts.size() << " basis sets:\n";
        for (const auto &p : parts)
          std::cout << "  k=" << p.k << " sigma=" << format_one_line(p.sigma) << '\n';
      }
      return 0;
    }

    if (*cover) {
      const PermSet T = parse_perm_set(read_input(input), degree_opt(degree));
      const auto r = obtainability_check(T);
      if (as_json) {
        print_json(to_json(r));
      } else if (r.found) {
        std::cout << "cover found (" << r.cover.size() << " pieces):\n";
        for (const auto &p : r.cover)
          std::cout << "  sigma=" << format_one_line(p.sigma) << " T_{" << p.k << "," << p.l
                    << "," << T.degree() << "}" << (p.swapped ? " *(1 2)" : "") << '\n';
      } else {
        std::cout << "no cover; search exhausted over " << r.candidates << " of "
                  << r.family_size << " translated sets (" << r.nodes << " nodes)\n"
                  << "model: " << cover_model_note << '\n';
      }
      return r.found ? 0 : 1;
    }

    if (*expand) {
      const Permutation sigma = parse_permutation(perm_text);
      const auto p =
          method == "shuffle" ? expand_bracket_shuffle(sigma) : expand_bracket_recursive(sigma);
      if (as_json)
        print_json({{"permutation", sigma.one_line()}, {"method", method}, {"terms", to_json(p)}});
      else
        std::cout << to_text(p) << '\n';
      return 0;
    }

    if (*matrix) {
      if (mod2)
        std::cout << build_beta_matrix_gf2(n).to_bit_string();
      else
        std::cout << build_beta_matrix(n).to_text();
      return 0;
    }

    if (*theta_cmd) {
      const Report rep = theta_report(n);
      if (as_json)
        print_json(rep.to_json());
      else
        print_report_text(rep, false);
      return rep.all_verified() ? 0 : 1;
    }

    if (*closure) {
      const Report rep = lemma1_property_suite(n, trials, seed);
      if (as_json)
        print_json(rep.to_json());
      else
        print_report_text(rep, false);
      return rep.all_verified() ? 0 : 1;
    }
  } catch (const InternalError &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
