#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pairspec/pairspec.hpp"

using namespace pairspec;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kCap = 2, kCheckFailed = 3 };

Json load_json_file(const std::string& path) { return detail::parse_json(read_text_file(path)); }

Pair load_pair_file(const std::string& path) {
  const Json j = load_json_file(path);
  if (is_hyper_json(j)) {
    throw Error(ErrorCode::BadParameter, "'" + path + "' is a hyperstructure; build a pair with construct power_set");
  }
  return to_pair(pair_file_from_json(j));
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write '" + path + "'");
  out << text;
}

std::size_t cap_or_default(std::size_t cli_cap) { return cli_cap ? cli_cap : default_congruence_cap(); }

std::vector<Couple> parse_generators(const Pair& p, const std::string& spec) {
  std::vector<Couple> gens;
  for (const auto& item : detail::split(spec, ',')) {
    const auto tilde = item.find('~');
    if (tilde == std::string::npos) throw Error(ErrorCode::BadParameter, "generator '" + item + "' is not of the form a~b");
    const auto a = p.structure().index_of(item.substr(0, tilde));
    const auto b = p.structure().index_of(item.substr(tilde + 1));
    if (!a || !b) throw Error(ErrorCode::UnknownLabel, "generator '" + item + "' names an undeclared label");
    gens.push_back({*a, *b});
  }
  return gens;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite nd-semiring pairs: validation, classification, congruences and spectra"};
  app.require_subcommand(1);

  std::string file, out_file, check_id, gens, builder;
  std::size_t max_cong = 0;
  bool all = false, timings = false;
  std::vector<std::string> params;

  auto* validate = app.add_subcommand("validate", "check the axioms and report Property N");
  validate->add_option("file", file, "pair or hyperstructure file")->required();

  auto* classify = app.add_subcommand("classify", "full classification as JSON");
  classify->add_option("file", file)->required();

  auto* congruences = app.add_subcommand("congruences", "list the congruence lattice");
  congruences->add_option("file", file)->required();
  congruences->add_option("--max", max_cong, "congruence cap");

  auto* spectrum = app.add_subcommand("spectrum", "prime spectra and related congruences");
  spectrum->add_option("file", file)->required();
  spectrum->add_option("--max", max_cong, "congruence cap");

  auto* verify = app.add_subcommand("verify", "run lemma checks");
  verify->add_option("file", file)->required();
  auto* check_opt = verify->add_option("--check", check_id, "check id");
  verify->add_flag("--all", all, "run every check")->excludes(check_opt);
  verify->add_option("--max", max_cong, "congruence cap");
  verify->add_flag("--timings", timings, "include runtimes");

  auto* construct = app.add_subcommand("construct", "build a catalog structure");
  construct->add_option("builder", builder)->required()->check(CLI::IsMember(builder_names()));
  construct->add_option("--param", params, "builder parameter key=value");
  construct->add_option("-o,--output", out_file, "output file");

  auto* quotient = app.add_subcommand("quotient", "quotient by a generated congruence");
  quotient->add_option("file", file)->required();
  quotient->add_option("--gen", gens, "generators a~b,c~d")->required();
  quotient->add_option("-o,--output", out_file, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const Json j = load_json_file(file);
      Json out;
      if (is_hyper_json(j)) {
        const HyperStructure h = to_hyperstructure(hyper_file_from_json(j));
        out = {{"valid", true}, {"kind", "hyperstructure"}, {"size", h.size()}, {"hyperfield", h.is_hyperfield()}};
      } else {
        const Pair p = to_pair(pair_file_from_json(j));
        const auto& f = p.structure().flags();
        out = {{"valid", true},
               {"kind", "pair"},
               {"name", p.name()},
               {"size", p.size()},
               {"property_n", p.property_n().has_value()},
               {"semiring", f.semiring()},
               {"t_distributive", p.t_distributive()}};
        if (p.property_n()) {
          out["e"] = p.label(p.e());
          out["one_dagger"] = p.label(p.witness().one_dagger);
        }
      }
      std::cout << canonical_dump(out);
    } else if (classify->parsed()) {
      const Pair p = load_pair_file(file);
      std::cout << canonical_dump(classification_json(p, classify_pair(p)));
    } else if (congruences->parsed()) {
      const CongruenceLattice lat = enumerate_congruences(load_pair_file(file), cap_or_default(max_cong));
      std::cout << canonical_dump(lattice_json(lat));
    } else if (spectrum->parsed()) {
      const std::size_t cap = cap_or_default(max_cong);
      const CongruenceLattice lat = enumerate_congruences(load_pair_file(file), cap);
      std::cout << canonical_dump(spectrum_json(lat, spectrum_report(lat, cap)));
    } else if (verify->parsed()) {
      if (!all && check_id.empty()) throw Error(ErrorCode::BadParameter, "verify needs --check ID or --all");
      CheckContext ctx(load_pair_file(file), cap_or_default(max_cong));
      std::vector<CheckReport> reports = all ? run_all(ctx) : std::vector<CheckReport>{run_check(ctx, check_id)};
      std::cout << canonical_dump(check_reports_json(ctx.pair(), reports, timings));
      for (const auto& r : reports) {
        if (r.passed && !*r.passed) return kCheckFailed;
      }
    } else if (construct->parsed()) {
      Params ps;
      for (const auto& kv : params) ps.insert(parse_param(kv));
      const Built b = build(builder, ps);
      write_output(b.pair ? serialize_pair_file(to_pair_file(*b.pair))
                          : serialize_hyper_file(to_hyper_file(*b.hyper, b.name)),
                   out_file);
    } else if (quotient->parsed()) {
      const Pair p = load_pair_file(file);
      const Congruence phi = generated_congruence(p, parse_generators(p, gens));
      write_output(serialize_pair_file(to_pair_file(quotient_pair(p, phi))), out_file);
    }
  } catch (const CapExceededError& e) {
    std::cout << canonical_dump(error_json(e));
    std::cerr << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cout << canonical_dump(error_json(e));
    std::cerr << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
