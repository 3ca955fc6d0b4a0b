// Copyright 2026 The wh Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "io.hpp"
#include "selftest.hpp"
#include "wh/error.hpp"
#include "wh/fredholm.hpp"
#include "wh/wiener_hopf.hpp"
#include "wh/z_oracle.hpp"

namespace wh::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not a number: \"" + s + "\"");
  }
}

std::int64_t to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: \"" + s + "\"");
  }
}

std::vector<double> doubles(const std::string& s, const char* what) {
  std::vector<double> v;
  for (const auto& part : split(s, ',')) v.push_back(to_double(part, what));
  return v;
}

Complex parse_complex(const std::string& s, const char* what) {
  const auto v = doubles(s, what);
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw ParseError(std::string(what) + ": expected re or re,im");
}

GroupElement parse_element(const std::string& s) {
  std::vector<std::int64_t> e;
  for (const auto& part : split(s, ',')) e.push_back(to_int(part, "window-box"));
  return GroupElement(std::move(e));
}

struct Options {
  std::string symbol;
  std::string symbol_file;
  std::string group;
  std::string box;
  std::string res = "128,128";
  double grid_step = kDefaultGridStep;
  std::size_t window = 256;
  std::string window_box;
  double tol = 0.0;
  std::string out;
  std::string lambda = "0";
  std::string vector;
  std::string vector_file;
  std::string blaschke;
  bool conjugate = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  TrigPolynomial symbol() const {
    if (o_.symbol.empty() == o_.symbol_file.empty()) {
      throw PreconditionError("exactly one of --symbol and --symbol-file is required");
    }
    const std::string text = o_.symbol.empty() ? io::read_file(o_.symbol_file) : o_.symbol;
    std::optional<OrderedGroup> g;
    if (!o_.group.empty()) g = io::group_from_json(io::parse(o_.group));
    return io::symbol_from_json(io::parse(text), g);
  }

  z::LaurentPolynomial laurent() const {
    const auto p = symbol();
    if (p.rank() != 1) throw DimensionError("this command works on the integers (rank 1) only");
    return z::LaurentPolynomial::from_trig(p);
  }

  void emit(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      io::write_file_atomic(o_.out, text);
    }
  }
  void emit(const io::Json& j) const { emit(j.dump() + "\n"); }

  Window window(const OrderedGroup& g) const {
    if (!o_.window_box.empty()) {
      const auto parts = split(o_.window_box, ';');
      if (parts.size() != 2) throw ParseError("--window-box: expected lo;hi, e.g. 0,0;3,3");
      return Window::box(g, parse_element(parts[0]), parse_element(parts[1]));
    }
    if (g.rank() != 1) throw UnsupportedWindowError("rank > 1 needs --window-box");
    return Window::omega_prefix(g, o_.window);
  }

  void index() const { emit(io::to_json(is_fredholm(symbol(), symbol().group()))); }

  void classify() const {
    const auto k = symbol();
    ClassifyOptions opts;
    opts.range_tolerance = o_.tol;
    opts.grid_step = o_.grid_step;
    emit(io::to_json(classify_lambda(k, k.group(), parse_complex(o_.lambda, "--lambda"), opts)));
  }

  void spectrum() const {
    const auto k = symbol();
    std::optional<Box> box;
    if (!o_.box.empty()) {
      const auto b = doubles(o_.box, "--box");
      if (b.size() != 4) throw ParseError("--box: expected re0,re1,im0,im1");
      box = Box{b[0], b[1], b[2], b[3]};
    }
    const auto r = split(o_.res, ',');
    if (r.empty() || r.size() > 2) throw ParseError("--res: expected n or nx,ny");
    const auto nx = to_int(r[0], "--res");
    const auto ny = r.size() == 2 ? to_int(r[1], "--res") : nx;
    if (nx <= 0 || ny <= 0) throw ResolutionError("--res must be positive");
    const auto grid = spectrum_grid(k, k.group(), box, static_cast<std::size_t>(nx), static_cast<std::size_t>(ny));
    const auto j = io::to_json(grid);
    if (o_.out.empty()) {
      out_ << j.dump() << "\n";
      return;
    }
    io::write_file_atomic(o_.out, j.dump() + "\n");
    const auto csv = std::filesystem::path(o_.out).replace_extension(".csv").string();
    io::write_file_atomic(csv, grid.to_csv());
    out_ << io::Json{{"json", o_.out}, {"csv", csv}, {"holes", j["hole_indices"]}}.dump() << "\n";
  }

  void norm() const {
    const auto k = symbol();
    std::vector<Window> windows;
    if (o_.window_box.empty() && k.rank() == 1) {
      for (std::size_t n = 16; n < o_.window; n *= 2) windows.push_back(Window::omega_prefix(k.group(), n));
      windows.push_back(Window::omega_prefix(k.group(), o_.window));
    } else {
      if (o_.window_box.empty()) throw UnsupportedWindowError("rank > 1 needs --window-box");
      // Nested boxes growing from lo to the requested box.
      const auto parts = split(o_.window_box, ';');
      if (parts.size() != 2) throw ParseError("--window-box: expected lo;hi, e.g. 0,0;3,3");
      const auto lo = parse_element(parts[0]);
      const auto hi = parse_element(parts[1]);
      if (lo.rank() != k.rank() || hi.rank() != k.rank()) throw DimensionError("--window-box rank mismatch");
      for (int t = 1; t <= 4; ++t) {
        std::vector<std::int64_t> h(lo.rank());
        for (std::size_t i = 0; i < lo.rank(); ++i) h[i] = lo[i] + (hi[i] - lo[i]) * t / 4;
        windows.push_back(Window::box(k.group(), lo, GroupElement(h)));
      }
    }
    const auto norms = operator_norm_lower(k, windows);
    const auto sup = certified_sup_norm(k, o_.grid_step);
    io::Json sizes = io::Json::array();
    for (const auto& w : windows) sizes.push_back(w.size());
    emit(io::Json{{"sizes", sizes}, {"norms", norms}, {"sup_norm", {{"lower", sup.lower}, {"upper", sup.upper}}}});
  }

  void apply_cmd() const {
    const auto k = symbol();
    if (o_.vector.empty() == o_.vector_file.empty()) {
      throw PreconditionError("exactly one of --vector and --vector-file is required");
    }
    const std::string text = o_.vector.empty() ? io::read_file(o_.vector_file) : o_.vector;
    emit(io::to_json(apply(k, io::vector_from_json(io::parse(text), k.group()))));
  }

  void truncate() const {
    const auto k = symbol();
    emit(truncation_matrix(k, window(k.group())).to_csv());
  }

  void factorize() const { emit(io::to_json(z::factorize(laurent()))); }

  void kernel() const {
    const auto p = laurent();
    const auto ew = z::exact_winding(p);
    if (std::holds_alternative<z::OnCircle>(ew)) {
      throw NotFactorizableError("symbol has a root on the unit circle; W_k is not Fredholm");
    }
    auto j = io::to_json(z::kernel_cokernel(p));
    j["w"] = std::get<std::int64_t>(ew);
    emit(j);
  }

  void hankel() const {
    io::Json j;
    Eigen::MatrixXcd h;
    const double tol = o_.tol > 0.0 ? o_.tol : 1e-10;
    if (!o_.blaschke.empty() || (o_.symbol.empty() && o_.symbol_file.empty())) {
      std::vector<Complex> zeros;
      for (const auto& part : split(o_.blaschke, ';')) {
        if (!part.empty()) zeros.push_back(parse_complex(part, "--blaschke"));
      }
      auto s = z::blaschke(zeros);
      if (o_.conjugate) s = s.conjugate();
      h = z::hankel_block(s, s.hankel_size_for(tol));
      const auto v = z::unimodular_invertibility(s);
      j["invertibility"] = z::to_string(v.verdict);
      j["conjugate_distance"] = v.conjugate_distance;
      j["w"] = v.winding;
    } else {
      auto p = laurent();
      if (o_.conjugate) p = p.conjugate();
      h = z::hankel_block(p, static_cast<std::size_t>(std::max<std::int64_t>(0, -p.n_min())));
    }
    const auto sv = linalg::singular_values(h);
    j["size"] = h.rows();
    j["singular_values"] = sv;
    j["nehari_distance"] = sv.empty() ? 0.0 : sv.front();
    emit(j);
  }

  int selftest() const {
    bool ok = true;
    std::ostringstream s;
    for (const auto& r : selftest::run_all()) {
      s << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      ok = ok && r.passed;
    }
    s << (ok ? "all suites passed" : "some suites failed") << "\n";
    emit(s.str());
    return ok ? kExitOk : kExitNumerical;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

void add_symbol_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--symbol", o.symbol, "symbol JSON, inline");
  cmd->add_option("--symbol-file", o.symbol_file, "symbol JSON file");
  cmd->add_option("--group", o.group, "group descriptor JSON overriding the symbol's");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fredholm indices and spectra of Wiener-Hopf operators on ordered groups", "wh"};
  app.require_subcommand(1);

  auto* index = app.add_subcommand("index", "Fredholm verdict and index of W_k");
  add_symbol_options(index, o);

  auto* classify = app.add_subcommand("classify", "classify a point lambda of the plane");
  add_symbol_options(classify, o);
  classify->add_option("--lambda", o.lambda, "re,im")->required();
  classify->add_option("--grid-step", o.grid_step, "dual grid step")->capture_default_str();
  classify->add_option("--tol", o.tol, "range tolerance (0: L * grid step)")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "label a grid of the plane; writes JSON and CSV");
  add_symbol_options(spectrum, o);
  spectrum->add_option("--box", o.box, "re0,re1,im0,im1 (default: range bounding box plus margin)");
  spectrum->add_option("--res", o.res, "nx,ny or n")->capture_default_str();

  auto* norm = app.add_subcommand("norm", "truncation norms and the certified sup-norm bracket");
  add_symbol_options(norm, o);
  norm->add_option("--window", o.window, "largest OmegaPrefix size")->capture_default_str();
  norm->add_option("--window-box", o.window_box, "lo;hi box window, e.g. 0,0;3,3");
  norm->add_option("--grid-step", o.grid_step, "dual grid step")->capture_default_str();

  auto* apply = app.add_subcommand("apply", "apply W_k to a finitely supported vector");
  add_symbol_options(apply, o);
  apply->add_option("--vector", o.vector, "vector JSON, inline");
  apply->add_option("--vector-file", o.vector_file, "vector JSON file");

  auto* truncate = app.add_subcommand("truncate", "truncation matrix as CSV");
  add_symbol_options(truncate, o);
  truncate->add_option("--window", o.window, "OmegaPrefix size")->capture_default_str();
  truncate->add_option("--window-box", o.window_box, "lo;hi box window");

  auto* factorize = app.add_subcommand("factorize", "Wiener-Hopf factorization (rank 1)");
  add_symbol_options(factorize, o);

  auto* hankel = app.add_subcommand("hankel", "Hankel block singular values and Nehari distance");
  add_symbol_options(hankel, o);
  hankel->add_option("--blaschke", o.blaschke, "zeros re,im;re,im;... of a Blaschke product");
  hankel->add_flag("--conjugate", o.conjugate, "use the conjugate symbol");
  hankel->add_option("--tol", o.tol, "tail tolerance for rational symbols (default 1e-10)");

  auto* kernel = app.add_subcommand("kernel", "kernel and cokernel of W_k (rank 1)");
  add_symbol_options(kernel, o);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--out", o.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitPrecondition;
  }

  const Runner r(o, out);
  try {
    if (*index) r.index();
    if (*classify) r.classify();
    if (*spectrum) r.spectrum();
    if (*norm) r.norm();
    if (*apply) r.apply_cmd();
    if (*truncate) r.truncate();
    if (*factorize) r.factorize();
    if (*hankel) r.hankel();
    if (*kernel) r.kernel();
    if (*selftest) return r.selftest();
  } catch (const PreconditionError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NumericalInconsistency& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace wh::cli
