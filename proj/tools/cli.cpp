#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>
#include <utility>

#include "experiments.hpp"

namespace fejerlab::lab {

namespace {

struct Shared {
  int grid_M = 0;
  int ppi = 8;
  std::uint64_t seed = 7;
  std::string out;
  std::string config;
};

void add_shared(CLI::App* sub, Shared& s, int default_M) {
  s.grid_M = default_M;
  sub->add_option("--grid-M", s.grid_M, "weight truncation order of the grid")->capture_default_str();
  sub->add_option("--ppi", s.ppi, "cells per anchor interval")->capture_default_str();
  sub->add_option("--seed", s.seed, "random seed")->capture_default_str();
  sub->add_option("--out", s.out, "CSV output path (stdout when omitted)");
  sub->add_option("--config", s.config, "key=value configuration file; flags win");
}

int report(const std::vector<Contract>& contracts, std::ostream& log) {
  for (const auto& c : contracts)
    log << (c.ok ? "ok       " : "VIOLATED ") << c.name << ": " << c.detail << '\n';
  return all_hold(contracts) ? kOk : kContractViolation;
}

// Writes CSV via `emit` to the requested destination and returns the stream
// the summary should go to.
std::ostream& write_output(const Shared& s, std::ostream& out, std::ostream& err,
                           const std::function<void(std::ostream&)>& emit) {
  if (s.out.empty()) {
    emit(out);
    return err;
  }
  std::ofstream file(s.out);
  if (!file) throw InvalidArgument("cannot open output file '" + s.out + "'");
  emit(file);
  if (!file) throw InvalidArgument("failed writing '" + s.out + "'");
  return out;
}

// Fills options of `sub` that were not given on the command line from a
// key=value file. Keys are long option names without the leading dashes.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InvalidArgument("cannot open config file '" + path + "'");
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_config(file);
  } catch (const CLI::ParseError& e) {
    throw InvalidArgument("config file '" + path + "': " + e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    if (!item.parents.empty() && item.parents.front() != sub->get_name())
      throw InvalidArgument("config section '" + item.parents.front() + "' does not match '" +
                            sub->get_name() + "'");
    CLI::Option* opt = sub->get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config")
      throw InvalidArgument("unknown config key '" + item.name + "'");
    if (opt->count() > 0) continue;
    try {
      for (const auto& v : item.inputs) opt->add_result(v);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw InvalidArgument("config key '" + item.name + "': " + e.what());
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fejer means, weighted L1 operator norms and Hardy-space checks on the circle",
               "fejerlab"};
  app.require_subcommand(1);

  Shared s_dual, s_blow, s_conv, s_wit, s_den, s_max, s_tay, s_prod;

  DualityConfig dual;
  auto* c_dual = app.add_subcommand("duality", "operator norms on L1(w) and its associate space");
  add_shared(c_dual, s_dual, 8);
  c_dual->add_option("--trials", dual.trials, "random even nonnegative kernels")->capture_default_str();
  c_dual->add_option("--random-max-M", dual.random_max_M, "largest M for random kernels")->capture_default_str();
  c_dual->add_option("--fejer-max-n", dual.fejer_max_n, "Fejer orders 0..n")->capture_default_str();

  BlowupConfig blow;
  auto* c_blow = app.add_subcommand("blowup", "Fejer operator norms against the bumps v_m");
  add_shared(c_blow, s_blow, 0);
  c_blow->add_option("--m", blow.m_list, "spike indices")->delimiter(',')->capture_default_str();
  c_blow->add_option("--n-max", blow.n_max, "search bound for n(m)")->capture_default_str();

  ConvergeConfig conv;
  auto* c_conv = app.add_subcommand("fejer-converge", "unweighted L1 error of Fejer means of an arc indicator");
  add_shared(c_conv, s_conv, 1);
  c_conv->add_option("--n", conv.n_list, "Fejer orders")->delimiter(',')->capture_default_str();
  c_conv->add_option("--arc-lo", conv.arc_lo, "arc start (radians)")->capture_default_str();
  c_conv->add_option("--arc-hi", conv.arc_hi, "arc end (radians)")->capture_default_str();
  c_conv->add_option("--limit", conv.limit, "required error at the last order")->capture_default_str();

  WitnessConfig wit;
  auto* c_wit = app.add_subcommand("witness", "gliding-hump function with non-convergent Fejer means");
  add_shared(c_wit, s_wit, 64);
  c_wit->add_option("--stages", wit.options.stages)->capture_default_str();
  c_wit->add_option("--target", wit.options.target, "per-stage error target")->capture_default_str();
  c_wit->add_option("--ratio", wit.options.ratio, "c_k = ratio^k")->capture_default_str();
  c_wit->add_option("--n-start", wit.options.n_start)->capture_default_str();
  c_wit->add_option("--n-max", wit.options.n_max)->capture_default_str();
  c_wit->add_option("--n-growth", wit.options.n_growth)->capture_default_str();
  c_wit->add_option("--retries", wit.options.retries)->capture_default_str();

  DensityConfig den;
  auto* c_den = app.add_subcommand("density", "best weighted L1 approximation by analytic polynomials");
  add_shared(c_den, s_den, 8);
  c_den->add_option("--functions", den.functions, "t3, inv-quarter")->delimiter(',')->capture_default_str();
  c_den->add_option("--degrees", den.degrees)->delimiter(',')->capture_default_str();
  c_den->add_option("--max-cell", den.max_cell, "largest cell (radians)")->capture_default_str();
  c_den->add_option("--reduction", den.reduction, "required final/initial error")->capture_default_str();
  c_den->add_option("--max-iters", den.irls.max_iters)->capture_default_str();
  c_den->add_option("--smoothing", den.irls.smoothing)->capture_default_str();

  MaximalConfig mx;
  auto* c_max = app.add_subcommand("maximal", "sup of (M w)/w for truncated weights");
  add_shared(c_max, s_max, 0);
  c_max->add_option("--M", mx.M_list, "weight orders")->delimiter(',')->capture_default_str();
  c_max->add_option("--growth", mx.growth, "required last/first ratio")->capture_default_str();

  TaylorConfig tay;
  auto* c_tay = app.add_subcommand("taylor-fourier", "Taylor coefficients of the disk extension");
  add_shared(c_tay, s_tay, 0);
  c_tay->add_option("--r", tay.radii, "radii")->delimiter(',')->capture_default_str();
  c_tay->add_option("--inputs", tay.random_inputs, "random analytic inputs")->capture_default_str();
  c_tay->add_option("--max-degree", tay.max_degree)->capture_default_str();

  ProductConfig prod;
  auto* c_prod = app.add_subcommand("product", "products of analytic polynomials stay analytic");
  add_shared(c_prod, s_prod, 0);
  c_prod->add_option("--pairs", prod.pairs)->capture_default_str();
  c_prod->add_option("--max-degree", prod.max_degree)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    const std::pair<CLI::App*, Shared*> subs[] = {{c_dual, &s_dual}, {c_blow, &s_blow}, {c_conv, &s_conv},
                                                  {c_wit, &s_wit},   {c_den, &s_den},   {c_max, &s_max},
                                                  {c_tay, &s_tay},   {c_prod, &s_prod}};
    for (const auto& [sub, shared] : subs)
      if (sub->parsed() && !shared->config.empty()) apply_config(sub, shared->config);

    if (c_dual->parsed()) {
      dual.seed = s_dual.seed;
      dual.fejer_max_M = s_dual.grid_M;
      dual.ppi = s_dual.ppi;
      const auto r = run_duality(dual);
      auto& log = write_output(s_dual, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"family", "index", "M", "norm_l1w", "norm_linfw", "relative_gap"});
        for (const auto& row : r.rows)
          csv.field(row.family).field(row.index).field(row.M).field(row.norm_l1w)
              .field(row.norm_linfw).field(row.relative_gap).end_row();
      });
      log << "max relative gap: " << format_double(r.max_relative_gap) << '\n';
      return report(r.contracts, log);
    }
    if (c_blow->parsed()) {
      blow.grid_M = s_blow.grid_M;
      blow.ppi = s_blow.ppi;
      const auto r = run_blowup(blow);
      auto& log = write_output(s_blow, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"m", "n_m", "delta_n", "bound", "pointwise_min", "norm_linfw", "norm_l1w"});
        for (const auto& row : r.rows)
          csv.field(row.m).field(row.n_m).field(row.delta_n).field(row.bound)
              .field(row.pointwise_min).field(row.norm_linfw).field(row.norm_l1w).end_row();
      });
      return report(r.contracts, log);
    }
    if (c_conv->parsed()) {
      conv.grid_M = s_conv.grid_M;
      conv.ppi = s_conv.ppi;
      const auto r = run_fejer_converge(conv);
      auto& log = write_output(s_conv, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"n", "error"});
        for (std::size_t k = 0; k < r.n_list.size(); ++k) csv.field(r.n_list[k]).field(r.errors[k]).end_row();
      });
      return report(r.contracts, log);
    }
    if (c_wit->parsed()) {
      wit.grid_M = s_wit.grid_M;
      wit.ppi = s_wit.ppi;
      const auto r = run_witness(wit);
      auto& log = write_output(s_wit, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"stage", "n", "cell", "theta", "coefficient", "operator_norm", "error"});
        int k = 1;
        for (const auto& st : r.report.stages)
          csv.field(k++).field(st.n).field(st.cell).field(st.theta).field(st.coefficient)
              .field(st.operator_norm).field(st.error).end_row();
      });
      if (!s_wit.out.empty() && !r.report.stages.empty()) {
        std::ofstream side(s_wit.out + ".txt");
        side << "stages " << r.report.stages.size() << "\nattempts " << r.report.attempts
             << "\nf_norm_l1w " << format_double(r.report.f_norm) << "\ngrid_M " << wit.grid_M
             << "\nppi " << wit.ppi << "\nnodes " << r.report.f.size() << '\n';
      }
      return report(r.contracts, log);
    }
    if (c_den->parsed()) {
      den.grid_M = s_den.grid_M;
      den.ppi = s_den.ppi;
      const auto r = run_density(den);
      auto& log = write_output(s_den, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"function", "degree", "error", "fejer_error", "converged"});
        for (const auto& c : r.curves)
          for (const auto& p : c.points)
            csv.field(c.function).field(p.degree).field(p.error).field(p.fejer_error)
                .field(p.converged ? 1 : 0).end_row();
      });
      return report(r.contracts, log);
    }
    if (c_max->parsed()) {
      mx.ppi = s_max.ppi;
      const auto r = run_maximal(mx);
      auto& log = write_output(s_max, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"M", "ratio", "argmax"});
        for (const auto& row : r.rows) csv.field(row.M).field(row.ratio).field(row.argmax).end_row();
      });
      return report(r.contracts, log);
    }
    if (c_tay->parsed()) {
      tay.seed = s_tay.seed;
      const auto r = run_taylor_fourier(tay);
      auto& log = write_output(s_tay, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"input", "r", "mismatch"});
        for (const auto& row : r.rows) csv.field(row.input).field(row.r).field(row.mismatch).end_row();
      });
      return report(r.contracts, log);
    }
    if (c_prod->parsed()) {
      prod.seed = s_prod.seed;
      const auto r = run_product(prod);
      auto& log = write_output(s_prod, out, err, [&](std::ostream& os) {
        CsvWriter csv(os);
        csv.header({"pair", "max_negative", "zero_mismatch"});
        for (const auto& row : r.rows) csv.field(row.pair).field(row.max_negative).field(row.zero_mismatch).end_row();
      });
      return report(r.contracts, log);
    }
  } catch (const GridTooCoarse& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const InvalidArgument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "contract violated: " << e.what() << '\n';
    return kContractViolation;
  }
  return kConfigError;
}

}  // namespace fejerlab::lab
