#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <ehrkit/analysis.hpp>
#include <ehrkit/eulerian.hpp>
#include <ehrkit/oracle.hpp>
#include <ehrkit/weight_expr.hpp>

#include "io.hpp"

using namespace ehrkit;

namespace {

constexpr int kOk = 0;
constexpr int kMathFail = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  long seed = 0;  // consumed by randomized modes; accepted globally
};

bool json_mode(const Options& o) { return o.format == "json"; }

Polytope load_polytope(const std::string& path) {
  return cli::parse_polytope(cli::read_file(path));
}

std::vector<std::pair<unsigned, Weight>> load_weight(const std::string& expr,
                                                     std::size_t dim) {
  return weight_parts(parse_weight(expr, dim), dim);
}

int run_hstar(const Options& opt, const std::string& polytope_path,
              const std::string& weight_expr) {
  Polytope p = load_polytope(polytope_path);
  HStarResult r = hstar_combined(p, load_weight(weight_expr, p.ambient_dim()));
  std::cout << (json_mode(opt) ? cli::hstar_to_json(r) : cli::hstar_to_text(r))
            << "\n";
  return kOk;
}

int run_series(const Options& opt, const std::string& polytope_path,
               const std::string& weight_expr, std::size_t dilations) {
  Polytope p = load_polytope(polytope_path);
  HStarResult r = hstar_combined(p, load_weight(weight_expr, p.ambient_dim()));
  RatVec coeffs = series_expand(r, dilations);
  std::cout << (json_mode(opt) ? cli::series_to_json(coeffs)
                               : cli::series_to_text(coeffs))
            << "\n";
  return kOk;
}

int run_decompose(const Options& opt, const std::string& polytope_path,
                  bool dump_points) {
  Polytope p = load_polytope(polytope_path);
  Triangulation t = triangulate(p);
  auto cells = half_open_decomposition(p, t);
  Int q = p.denominator();

  if (json_mode(opt)) {
    std::string out = "{\"period\": " + q.get_str() + ", \"cells\": [";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out += ", ";
      out += "{\"vertices\": [";
      for (std::size_t i = 0; i < t.cells[c].size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(t.cells[c][i]);
      }
      out += "], \"strict\": [";
      bool first = true;
      for (std::size_t s : cells[c].strict) {
        if (!first) out += ", ";
        out += std::to_string(s);
        first = false;
      }
      out += "]";
      if (dump_points) {
        out += ", \"points\": [";
        auto pts = enumerate_points(cone_generators(cells[c], q));
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (i) out += ", ";
          out += "{\"x\": [";
          for (std::size_t j = 0; j < pts[i].x.size(); ++j) {
            if (j) out += ", ";
            out += pts[i].x[j].get_str();
          }
          out += "], \"lambda\": [";
          for (std::size_t j = 0; j < pts[i].lambdas.size(); ++j) {
            if (j) out += ", ";
            out += "\"" + pts[i].lambdas[j].get_str() + "\"";
          }
          out += "], \"height\": " + pts[i].height.get_str() + "}";
        }
        out += "]";
      }
      out += "}";
    }
    out += "]}";
    std::cout << out << "\n";
    return kOk;
  }

  std::cout << "period: " << q.get_str() << "\n";
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::cout << "cell " << c << ": vertices [";
    for (std::size_t i = 0; i < t.cells[c].size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << t.cells[c][i];
    }
    std::cout << "] strict {";
    bool first = true;
    for (std::size_t s : cells[c].strict) {
      if (!first) std::cout << ", ";
      std::cout << s;
      first = false;
    }
    std::cout << "}\n";
    if (dump_points) {
      for (const auto& pt : enumerate_points(cone_generators(cells[c], q))) {
        std::cout << "  point height " << pt.height.get_str() << ", x = (";
        for (std::size_t j = 0; j < pt.x.size(); ++j) {
          if (j) std::cout << ", ";
          std::cout << pt.x[j].get_str();
        }
        std::cout << "), lambda = (";
        for (std::size_t j = 0; j < pt.lambdas.size(); ++j) {
          if (j) std::cout << ", ";
          std::cout << pt.lambdas[j].get_str();
        }
        std::cout << ")\n";
      }
    }
  }
  return kOk;
}

int run_eulerian(const Options& opt, unsigned long d, const std::string& lambda) {
  Poly a = eulerian_poly(d, parse_rat(lambda));
  std::cout << (json_mode(opt) ? cli::poly_to_json(a) : a.str()) << "\n";
  return kOk;
}

Weight single_part(const std::string& weight_expr, std::size_t dim) {
  auto parts = load_weight(weight_expr, dim);
  if (parts.size() != 1)
    throw Error("this check needs a homogeneous weight (one degree)");
  return parts[0].second;
}

int run_check_nonneg(const Options& opt, const std::string& polytope_path,
                     const std::string& weight_expr) {
  Polytope p = load_polytope(polytope_path);
  HStarResult r = hstar_combined(p, load_weight(weight_expr, p.ambient_dim()));
  auto witness = check_nonneg_coeffs(r.numerator);
  if (json_mode(opt)) {
    std::cout << "{\"pass\": " << (witness ? "false" : "true");
    if (witness) std::cout << ", \"witness_exponent\": " << *witness;
    std::cout << "}\n";
  } else if (witness) {
    std::cout << "FAIL: negative coefficient "
              << r.numerator.coeff(*witness).get_str() << " at t^" << *witness
              << "\n";
  } else {
    std::cout << "PASS: all coefficients nonnegative\n";
  }
  return witness ? kMathFail : kOk;
}

int run_check_ray(const Options& opt, const std::string& polytope_path,
                  const std::string& weight_expr) {
  Polytope p = load_polytope(polytope_path);
  HStarResult r = hstar_combined(p, load_weight(weight_expr, p.ambient_dim()));
  RayCheck rc = nonneg_on_ray(r.numerator);
  if (json_mode(opt)) {
    std::cout << "{\"pass\": " << (rc.pass ? "true" : "false");
    if (!rc.pass)
      std::cout << ", \"witness_interval\": [\"" << rc.lo.get_str() << "\", \""
                << rc.hi.get_str() << "\"]";
    std::cout << "}\n";
  } else if (rc.pass) {
    std::cout << "PASS: h*(t) >= 0 for all t >= 0\n";
  } else {
    std::cout << "FAIL: sign violation isolated in [" << rc.lo.get_str() << ", "
              << rc.hi.get_str() << "]\n";
  }
  return rc.pass ? kOk : kMathFail;
}

int run_check_monotone(const Options& opt, const std::string& polytope_path,
                       const std::string& inside_path,
                       const std::string& weight_expr, long g,
                       const std::string& mode) {
  Polytope inner = load_polytope(polytope_path);
  Polytope outer = load_polytope(inside_path);
  Weight w = single_part(weight_expr, inner.ambient_dim());
  MonotoneMode m = mode == "ray" ? MonotoneMode::Ray : MonotoneMode::Coeffwise;
  MonotoneReport rep = check_monotonicity(inner, outer, w, Int(g), m);
  if (json_mode(opt)) {
    std::cout << "{\"pass\": " << (rep.pass ? "true" : "false")
              << ", \"lhs\": " << cli::poly_to_json(rep.lhs)
              << ", \"rhs\": " << cli::poly_to_json(rep.rhs);
    if (rep.witness_exponent)
      std::cout << ", \"witness_exponent\": " << *rep.witness_exponent;
    if (rep.witness_interval)
      std::cout << ", \"witness_interval\": [\"" << rep.witness_interval->first.get_str()
                << "\", \"" << rep.witness_interval->second.get_str() << "\"]";
    std::cout << "}\n";
  } else {
    std::cout << "lhs = " << rep.lhs.str() << "\n";
    std::cout << "rhs = " << rep.rhs.str() << "\n";
    if (rep.pass) {
      std::cout << "PASS: lhs <= rhs in mode " << mode << "\n";
    } else {
      std::cout << "FAIL";
      if (rep.witness_exponent)
        std::cout << ": rhs - lhs has coefficient "
                  << (rep.rhs - rep.lhs).coeff(*rep.witness_exponent).get_str()
                  << " at t^" << *rep.witness_exponent;
      if (rep.witness_interval)
        std::cout << ": rhs - lhs negative near ["
                  << rep.witness_interval->first.get_str() << ", "
                  << rep.witness_interval->second.get_str() << "]";
      std::cout << "\n";
    }
  }
  return rep.pass ? kOk : kMathFail;
}

int run_tensor_h2(const Options& opt, const std::string& polytope_path,
                  bool check_psd) {
  Polytope p = load_polytope(polytope_path);
  TensorHPoly t = h2_tensor(p);
  bool all_psd = true;
  std::size_t bad_index = 0;
  PsdCheck bad{};
  for (std::size_t i = 0; i < t.coeffs.size() && check_psd; ++i) {
    PsdCheck pc = is_psd(t.coeffs[i]);
    if (!pc.psd) {
      all_psd = false;
      bad_index = i;
      bad = pc;
      break;
    }
  }
  if (json_mode(opt)) {
    std::cout << "{\"coefficients\": [";
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << cli::matrix_to_json(t.coeffs[i]);
    }
    std::cout << "]";
    if (check_psd) {
      std::cout << ", \"psd\": " << (all_psd ? "true" : "false");
      if (!all_psd) {
        std::cout << ", \"witness_index\": " << bad_index << ", \"witness\": [";
        for (std::size_t j = 0; j < bad.witness.size(); ++j) {
          if (j) std::cout << ", ";
          std::cout << "\"" << bad.witness[j].get_str() << "\"";
        }
        std::cout << "], \"witness_value\": \"" << bad.value.get_str() << "\"";
      }
    }
    std::cout << "}\n";
  } else {
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
      std::cout << "h_" << i << "^2 =\n"
                << cli::matrix_to_text(t.coeffs[i]) << "\n";
    }
    if (check_psd) {
      if (all_psd) {
        std::cout << "PASS: every coefficient is positive semi-definite\n";
      } else {
        std::cout << "FAIL: h_" << bad_index << "^2 is not psd; v^T M v = "
                  << bad.value.get_str() << " for v = (";
        for (std::size_t j = 0; j < bad.witness.size(); ++j) {
          if (j) std::cout << ", ";
          std::cout << bad.witness[j].get_str();
        }
        std::cout << ")\n";
      }
    }
  }
  return (check_psd && !all_psd) ? kMathFail : kOk;
}

int run_verify(const Options& opt, const std::string& polytope_path,
               const std::string& weight_expr, std::size_t dilations) {
  Polytope p = load_polytope(polytope_path);
  VerifyReport rep =
      verify_series(p, load_weight(weight_expr, p.ambient_dim()), dilations);
  if (json_mode(opt)) {
    std::cout << "{\"pass\": " << (rep.pass ? "true" : "false");
    if (!rep.pass) std::cout << ", \"first_mismatch\": " << rep.first_mismatch;
    std::cout << "}\n";
  } else {
    for (std::size_t n = 0; n < rep.expected.size(); ++n) {
      bool same = rep.actual[n] == rep.expected[n];
      std::cout << n << ": series " << rep.actual[n].get_str() << ", oracle "
                << rep.expected[n].get_str() << (same ? "" : "  <-- mismatch")
                << "\n";
    }
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? kOk : kMathFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weighted Ehrhart series toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized modes");

  std::string polytope_path, inside_path, weight_expr, lambda, mode = "coeffwise";
  std::size_t dilations = 10;
  unsigned long eul_d = 0;
  long g = 1;
  bool dump_points = false, check_psd = false;

  auto* hstar_cmd = app.add_subcommand("hstar", "weighted h*-polynomial");
  hstar_cmd->add_option("--polytope", polytope_path, "polytope JSON file")->required();
  hstar_cmd->add_option("--weight", weight_expr, "weight expression")->required();

  auto* series_cmd = app.add_subcommand("series", "weighted lattice point sums");
  series_cmd->add_option("--polytope", polytope_path)->required();
  series_cmd->add_option("--weight", weight_expr)->required();
  series_cmd->add_option("--dilations", dilations, "expand up to this dilation")->required();

  auto* dec_cmd = app.add_subcommand("decompose", "half-open decomposition");
  dec_cmd->add_option("--polytope", polytope_path)->required();
  dec_cmd->add_flag("--dump-points", dump_points, "list parallelepiped points");

  auto* eul_cmd = app.add_subcommand("eulerian", "parametrized Eulerian polynomial");
  eul_cmd->add_option("D", eul_d, "degree")->required();
  eul_cmd->add_option("LAMBDA", lambda, "shift in [0,1], as p/q")->required();

  auto* check_cmd = app.add_subcommand("check", "decision procedures");
  check_cmd->require_subcommand(1);
  auto* nonneg_cmd = check_cmd->add_subcommand("nonneg", "coefficientwise nonnegativity");
  nonneg_cmd->add_option("--polytope", polytope_path)->required();
  nonneg_cmd->add_option("--weight", weight_expr)->required();
  auto* ray_cmd = check_cmd->add_subcommand("ray", "nonnegativity on t >= 0");
  ray_cmd->add_option("--polytope", polytope_path)->required();
  ray_cmd->add_option("--weight", weight_expr)->required();
  auto* mono_cmd = check_cmd->add_subcommand("monotone", "h* monotonicity under containment");
  mono_cmd->add_option("--polytope", polytope_path, "inner polytope")->required();
  mono_cmd->add_option("--inside", inside_path, "containing polytope")->required();
  mono_cmd->add_option("--weight", weight_expr)->required();
  mono_cmd->add_option("--g", g, "common multiple of both denominators");
  mono_cmd->add_option("--mode", mode)->check(CLI::IsMember({"coeffwise", "ray"}));

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor-valued coefficients");
  tensor_cmd->require_subcommand(1);
  auto* h2_cmd = tensor_cmd->add_subcommand("h2", "rank-2 coefficient matrices");
  h2_cmd->add_option("--polytope", polytope_path)->required();
  h2_cmd->add_flag("--psd", check_psd, "check positive semidefiniteness");

  auto* verify_cmd = app.add_subcommand("verify", "series against brute force");
  verify_cmd->add_option("--polytope", polytope_path)->required();
  verify_cmd->add_option("--weight", weight_expr)->required();
  verify_cmd->add_option("--dilations", dilations)->required();

  // global flags (--format, --seed) may appear after the subcommand
  for (CLI::App* sub : {hstar_cmd, series_cmd, dec_cmd, eul_cmd, check_cmd,
                        nonneg_cmd, ray_cmd, mono_cmd, tensor_cmd, h2_cmd,
                        verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  try {
    if (*hstar_cmd) return run_hstar(opt, polytope_path, weight_expr);
    if (*series_cmd) return run_series(opt, polytope_path, weight_expr, dilations);
    if (*dec_cmd) return run_decompose(opt, polytope_path, dump_points);
    if (*eul_cmd) return run_eulerian(opt, eul_d, lambda);
    if (*nonneg_cmd) return run_check_nonneg(opt, polytope_path, weight_expr);
    if (*ray_cmd) return run_check_ray(opt, polytope_path, weight_expr);
    if (*mono_cmd)
      return run_check_monotone(opt, polytope_path, inside_path, weight_expr, g, mode);
    if (*h2_cmd) return run_tensor_h2(opt, polytope_path, check_psd);
    if (*verify_cmd) return run_verify(opt, polytope_path, weight_expr, dilations);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
