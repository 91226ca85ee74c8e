#include "minmod/cli.hpp"

#include "minmod/commutant.hpp"
#include "minmod/fusion_ring.hpp"
#include "minmod/kac.hpp"
#include "minmod/modular.hpp"
#include "minmod/qseries.hpp"
#include "minmod/threec.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace minmod::cli {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

std::string multiset_to_text(const Multiset& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [label, n] : m) {
    if (!out.empty()) out += " + ";
    if (n != 1) out += std::to_string(n) + "*";
    out += label;
  }
  return out;
}

void print_ring_markdown(const FusionRing& ring, std::ostream& out) {
  out << "| x |";
  for (const auto& l : ring.labels()) out << " " << l << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < ring.size(); ++i) out << "---|";
  out << "\n";
  for (const auto& a : ring.labels()) {
    out << "| " << a << " |";
    for (const auto& b : ring.labels())
      out << " " << multiset_to_text(ring.fuse(a, b)) << " |";
    out << "\n";
  }
}

struct Options {
  int m = 0;
  std::string instance;
  std::string data_dir;
  std::string a, b;
  std::string c, h, field;
  std::string order = "10";
  bool json = false;
};

int cmd_kac(const Options& opt, std::ostream& out) {
  MinimalModel model(opt.m);
  ModularData data = s_matrix(model);
  if (opt.json) {
    nlohmann::json j;
    j["m"] = model.m();
    j["c"] = to_string(model.central_charge());
    auto& rows = j["primaries"] = nlohmann::json::array();
    for (std::size_t i = 0; i < data.size(); ++i)
      rows.push_back({{"label", data.labels()[i]},
                      {"h", to_string(data.primaries()[i].weight())},
                      {"qdim", data.qdim(i)}});
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "m=" << model.m() << " p=" << model.p() << " q=" << model.q()
      << " c=" << to_string(model.central_charge()) << "\n";
  out << "label\th\tqdim\n";
  for (std::size_t i = 0; i < data.size(); ++i)
    out << data.labels()[i] << "\t"
        << to_string(data.primaries()[i].weight()) << "\t"
        << fmt_double(data.qdim(i)) << "\n";
  return 0;
}

int cmd_dims(const Options& opt, std::ostream& out) {
  MinimalModel model(opt.m);
  ModularData data = s_matrix(model);
  if (opt.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < data.size(); ++i)
      rows.push_back({{"label", data.labels()[i]},
                      {"h", to_string(data.primaries()[i].weight())},
                      {"qdim", data.qdim(i)}});
    out << rows.dump(2) << "\n";
    return 0;
  }
  out << "label\th\tqdim\n";
  for (std::size_t i = 0; i < data.size(); ++i)
    out << data.labels()[i] << "\t"
        << to_string(data.primaries()[i].weight()) << "\t"
        << fmt_double(data.qdim(i)) << "\n";
  return 0;
}

int cmd_fusion(const Options& opt, std::ostream& out) {
  FusionRing ring = [&] {
    if (!opt.instance.empty()) {
      if (opt.instance != "3c")
        throw std::invalid_argument("unknown instance: " + opt.instance);
      return build_m_ring(ThreeCDataset::load(opt.data_dir));
    }
    return minimal_model_fusion(MinimalModel(opt.m));
  }();
  if (!opt.a.empty() || !opt.b.empty()) {
    if (opt.a.empty() || opt.b.empty())
      throw std::invalid_argument("--a and --b must be given together");
    out << opt.a << " x " << opt.b << " = "
        << multiset_to_text(ring.fuse(opt.a, opt.b)) << "\n";
    return 0;
  }
  if (opt.json)
    out << ring.to_json().dump(2) << "\n";
  else
    print_ring_markdown(ring, out);
  return 0;
}

int cmd_chars(const Options& opt, std::ostream& out) {
  std::optional<PrimaryField> field;
  if (!opt.c.empty()) {
    if (opt.h.empty())
      throw std::invalid_argument("--c requires --h");
    auto model = model_with_central_charge(parse_rational(opt.c));
    if (!model)
      throw std::invalid_argument("no minimal model has central charge " +
                                  opt.c);
    field = field_with_weight(*model, parse_rational(opt.h));
    if (!field)
      throw std::invalid_argument("no primary of weight " + opt.h +
                                  " at central charge " + opt.c);
  } else if (opt.m > 0 && !opt.field.empty()) {
    field = parse_field(MinimalModel(opt.m), opt.field);
  } else {
    throw std::invalid_argument("need --c/--h or --m/--field");
  }
  Rational rel = parse_rational(opt.order);
  if (rel < 1) throw std::invalid_argument("--order must be >= 1");
  Rational lead = field->weight() - field->model().central_charge() / 24;
  FormalQSeries chi = minimal_character(*field, lead + rel);
  for (const auto& [e, coeff] : chi.terms())
    out << to_string(e) << "\t" << to_string(coeff) << "\n";
  return 0;
}

int cmd_verify_decomp(const Options& opt, std::ostream& out) {
  Rational rel = parse_rational(opt.order);
  auto dataset = ThreeCDataset::load(opt.data_dir);
  SeriesComparison result = verify_e8(dataset, rel);
  out << result.summary() << "\n";
  return result.pass ? 0 : 1;
}

int cmd_verify_factorization(const Options& opt, std::ostream& out) {
  if (opt.instance != "3c")
    throw std::invalid_argument("unknown instance: " + opt.instance);
  auto dataset = ThreeCDataset::load(opt.data_dir);
  ValidationReport report = verify_factorization(dataset);
  out << report.summary();
  out << (report.ok() ? "PASS" : "FAIL") << "\n";
  return report.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact minimal-model fusion rings, commutant fusion rules "
               "and q-series character identities"};
  app.require_subcommand(1);
  Options opt;
  opt.data_dir = default_data_dir();

  auto* kac = app.add_subcommand("kac", "list the primaries of a model");
  kac->add_option("--m", opt.m, "model index")->required();
  kac->add_flag("--json", opt.json, "machine-readable output");

  auto* dims = app.add_subcommand("dims", "labels, weights and qdims");
  dims->add_option("--m", opt.m, "model index")->required();
  dims->add_flag("--json", opt.json, "machine-readable output");

  auto* fusion = app.add_subcommand("fusion", "fusion table or product");
  fusion->add_option("--m", opt.m, "model index");
  fusion->add_option("--instance", opt.instance, "named instance (3c)");
  fusion->add_option("--data", opt.data_dir, "dataset directory");
  fusion->add_option("--a", opt.a, "left label");
  fusion->add_option("--b", opt.b, "right label");
  fusion->add_flag("--json", opt.json, "machine-readable output");

  auto* chars = app.add_subcommand("chars", "character q-expansion");
  chars->set_help_flag("--help", "print help");
  chars->add_option("--c", opt.c, "central charge (rational)");
  chars->add_option("--h", opt.h, "conformal weight (rational)");
  chars->add_option("--m", opt.m, "model index");
  chars->add_option("--field", opt.field, "label r.s");
  chars->add_option("--order", opt.order, "terms above the leading exponent")
      ->envname("MINMOD_ORDER");

  auto* vd = app.add_subcommand("verify-decomp",
                                "certify the sqrt(2)E8 character identity");
  vd->add_option("--order", opt.order, "terms above the leading exponent")
      ->envname("MINMOD_ORDER");
  vd->add_option("--data", opt.data_dir, "dataset directory");

  auto* vf = app.add_subcommand("verify-factorization",
                                "run all commutant fusion checks");
  vf->add_option("--instance", opt.instance, "named instance (3c)")
      ->required();
  vf->add_option("--data", opt.data_dir, "dataset directory");

  std::vector<const char*> argv;
  argv.push_back("minmod");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (kac->parsed()) return cmd_kac(opt, out);
    if (dims->parsed()) return cmd_dims(opt, out);
    if (fusion->parsed()) {
      if (opt.instance.empty() && opt.m == 0)
        throw std::invalid_argument("need --m or --instance");
      return cmd_fusion(opt, out);
    }
    if (chars->parsed()) return cmd_chars(opt, out);
    if (vd->parsed()) return cmd_verify_decomp(opt, out);
    if (vf->parsed()) return cmd_verify_factorization(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace minmod::cli
