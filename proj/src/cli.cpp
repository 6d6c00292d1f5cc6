#include "gmm/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmm/errors.hpp"
#include "gmm/io.hpp"
#include "gmm/map_format.hpp"
#include "gmm/pipeline.hpp"
#include "gmm/reduction.hpp"
#include "gmm/resultant.hpp"

namespace gmm::cli {

namespace {

using io::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_forms(std::ostream& out, const HomogeneousLift& lift,
                 const std::vector<std::string>& coords) {
  for (const auto& f : lift.forms()) out << "  " << render(f, coords) << "\n";
}

void print_model(std::ostream& out, const Model& model, const std::vector<std::string>& coords) {
  out << "forms\n";
  print_forms(out, model.lift(), coords);
  out << "resultant " << to_string(resultant(model.lift())) << "\n";
  out << "conjugator " << to_string(model.conjugator()) << "\n";
  out << "scalar " << to_string(model.scalar()) << "\n";
}

struct Options {
  std::string file;
  std::string prime;
  int radius = 3;
  bool json = false;
  bool emit_map = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resultants, local and global minimal models of endomorphisms of P^N over Q",
               "gmm"};
  app.require_subcommand(1);
  Options opt;
  std::function<void()> action;

  auto add = [&](const std::string& name, const std::string& about, const std::string& file_help,
                 bool with_radius, std::function<void()> body) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("file", opt.file, file_help)->required();
    sub->add_flag("--json", opt.json, "Structured JSON output");
    if (with_radius)
      sub->add_option("--radius", opt.radius, "Local search radius")->check(CLI::NonNegativeNumber);
    sub->callback([&action, body] { action = body; });
    return sub;
  };

  add("res", "Print the resultant", "Map file", false, [&] {
    const Rational res = resultant(parse_map(read_file(opt.file)));
    if (opt.json) {
      Json j;
      j["resultant"] = io::to_json(res);
      out << j.dump(2) << "\n";
    } else {
      out << to_string(res) << "\n";
    }
  });

  add("morphism", "Test whether the map is a morphism", "Map file", false, [&] {
    const Rational res = resultant(parse_map(read_file(opt.file)));
    if (opt.json) {
      Json j;
      j["morphism"] = res != 0;
      j["resultant"] = io::to_json(res);
      out << j.dump(2) << "\n";
    } else {
      out << (res != 0 ? "true" : "false") << "\n";
    }
  });

  add("badprimes", "List primes of possible bad reduction", "Map file", false, [&] {
    const auto primes = bad_primes(parse_map(read_file(opt.file)));
    if (opt.json) {
      Json list = Json::array();
      for (const auto& p : primes) list.push_back(io::to_json(p.value()));
      Json j;
      j["bad_primes"] = std::move(list);
      out << j.dump(2) << "\n";
      return;
    }
    if (primes.empty()) {
      out << "(none)\n";
      return;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? " " : "") << primes[i].str();
    out << "\n";
  });

  CLI::App* minimize = add("minimize", "Minimize ord_p(Res) by local search", "Map file", true, [&] {
    const auto doc = read_map_document(read_file(opt.file));
    const Prime p{Integer(opt.prime)};
    const auto result = minimize_local(doc.lift, p, opt.radius);
    if (opt.json) {
      Json j;
      j["prime"] = io::to_json(p.value());
      j["valuation"] = result.valuation;
      j["radius_exhausted"] = result.radius_exhausted;
      j["visited"] = result.visited;
      j["model"] = io::to_json(result.model, doc.coords);
      out << j.dump(2) << "\n";
      return;
    }
    out << "prime " << p.str() << "\n"
        << "valuation " << result.valuation << "\n"
        << "radius_exhausted " << (result.radius_exhausted ? "yes" : "no") << "\n"
        << "visited " << result.visited << "\n";
    print_model(out, result.model, doc.coords);
  });
  minimize->add_option("-p,--prime", opt.prime, "Prime")->required()->check(CLI::PositiveNumber);

  CLI::App* gmm_cmd = add("gmm", "Global minimal model", "Map file", true, [&] {
    const auto doc = read_map_document(read_file(opt.file));
    const auto result = global_minimal_model(doc.lift, opt.radius);
    if (opt.emit_map) {
      out << render_map(result.model.lift(), doc.coords);
      return;
    }
    if (opt.json) {
      Json j;
      j["model"] = io::to_json(result.model, doc.coords);
      j["report"] = io::to_json(result.report);
      out << j.dump(2) << "\n";
      return;
    }
    print_model(out, result.model, doc.coords);
    out << to_table(result.report);
  });
  gmm_cmd->add_flag("--emit-map", opt.emit_map, "Print the model as a map file");

  add("egr", "Model with unit resultant, if every bad prime reaches valuation 0", "Map file", true,
      [&] {
        const auto doc = read_map_document(read_file(opt.file));
        const auto result = everywhere_good_reduction_model(doc.lift, opt.radius);
        if (const auto* model = std::get_if<Model>(&result)) {
          if (opt.json) {
            Json j;
            j["found"] = true;
            j["model"] = io::to_json(*model, doc.coords);
            out << j.dump(2) << "\n";
          } else {
            print_model(out, *model, doc.coords);
          }
          return;
        }
        const auto& missing = std::get<NoUnitModelFound>(result);
        if (opt.json) {
          Json j;
          j["found"] = false;
          j["report"] = io::to_json(missing.report);
          out << j.dump(2) << "\n";
        } else {
          out << "no unit model found\n" << to_table(missing.report);
        }
      });

  add("report", "Per-prime reduction report", "Map file", true, [&] {
    const auto report = reduction_report(parse_map(read_file(opt.file)), opt.radius);
    if (opt.json)
      out << io::to_json(report).dump(2) << "\n";
    else
      out << to_table(report);
  });

  add("glue", "Glue local lattice data into a global lattice", "Adelic data file", false, [&] {
    const AdeleMatrix adele = io::read_adele_document(read_file(opt.file));
    const Lattice lattice = act(adele, Lattice::standard(adele.dim()));
    if (opt.json) {
      Json j;
      j["basis"] = io::to_json(lattice.basis());
      j["generator_matrix"] = io::to_json(lattice.generator_matrix());
      out << j.dump(2) << "\n";
    } else {
      out << "basis " << to_string(lattice.basis()) << "\n";
    }
  });

  add("factorize", "Factor an adele as (stabilizer part) * (principal part)", "Adelic data file",
      false, [&] {
        const AdeleMatrix adele = io::read_adele_document(read_file(opt.file));
        const auto f = adelic_factorize(adele);
        const auto& c = f.stabilizer_part;
        if (opt.json) {
          Json components = Json::array();
          for (const auto& [p, m] : c.support()) {
            Json entry;
            entry["prime"] = io::to_json(p.value());
            entry["matrix"] = io::to_json(m);
            components.push_back(std::move(entry));
          }
          Json j;
          j["principal"] = io::to_json(f.principal_part);
          j["stabilizer"]["default"] = io::to_json(c.default_component());
          j["stabilizer"]["components"] = std::move(components);
          out << j.dump(2) << "\n";
          return;
        }
        out << "principal " << to_string(f.principal_part) << "\n";
        out << "stabilizer default " << to_string(c.default_component()) << "\n";
        for (const auto& [p, m] : c.support())
          out << "stabilizer at " << p.str() << " " << to_string(m) << "\n";
      });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    action();
    return kExitOk;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gmm::cli
