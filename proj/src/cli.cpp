#include "chinampa/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "chinampa/algebra.hpp"
#include "chinampa/enumeration.hpp"
#include "chinampa/errors.hpp"
#include "chinampa/io.hpp"
#include "chinampa/persistent_cascades.hpp"
#include "chinampa/render.hpp"
#include "chinampa/triangular_sequences.hpp"

namespace chinampa {

namespace {

struct Options {
  std::string out_path;
  std::string network_path;
  std::string stimuli_path;
  std::optional<int> horizon;
  std::optional<int> width;
  std::string render;
  int vertex = 0;
  int time = 0;
  int n = 0;
  std::string profile = "3:1";
  std::string family;
  int R = 0;
  int K = 0;
  int terms = 10;
  std::string set;
  bool list = false;
  bool count = false;
  std::optional<int> series;
};

Network choose_network(const Options& o, const StvSet& stimuli) {
  if (!o.network_path.empty()) return read_network_file(o.network_path);
  if (o.width) return make_path(*o.width);
  int widest = 1;
  for (const Stv& s : stimuli) widest = std::max(widest, s.vertex);
  return make_path(widest);
}

void emit_render(const ActivationDiagram& d, const std::string& format, std::ostream& out) {
  if (format == "ascii") out << render_ascii(d);
  else if (format == "svg") out << render_svg(d);
  else throw Error(ErrorKind::parse, "render format must be ascii or svg");
}

VertexSet parse_set(const std::string& text) {
  VertexSet S;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      S.insert(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, "--set expects comma-separated vertex ids");
    }
  }
  return S;
}

std::string closed_form_for(int n, const StackProfile& profile) {
  const auto& c = profile.counts;
  if (profile.pure_chain()) return c.at(2) == n - 1 ? (BigCount(1) << (n - 2)).str() : "NA";
  if (c.size() != 1) return "NA";
  const auto [length, count] = *c.begin();
  if (length == 3 && count == 1 && n >= 3) return profit0_closed_form(n - 3).str();
  if (length == 3 && count == 2 && n >= 4) return profit1_series(n - 3).back().str();
  if (n == length + count - 1) return (BigCount(1) << (count - 1)).str();
  return "NA";
}

void cmd_simulate(const Options& o, std::ostream& out) {
  const StvSet stimuli = read_stimuli_file(o.stimuli_path);
  const Network network = choose_network(o, stimuli);
  const ActivationDiagram d = activation_closure(network, stimuli, o.horizon);
  out << activation_to_json(d).dump() << '\n';
  if (!o.render.empty()) emit_render(d, o.render, out);
}

void cmd_render(const Options& o, std::ostream& out) {
  const StvSet stimuli = read_stimuli_file(o.stimuli_path);
  const ActivationDiagram d = activation_closure(choose_network(o, stimuli), stimuli, o.horizon);
  emit_render(d, o.render.empty() ? "ascii" : o.render, out);
}

void cmd_query(const Options& o, std::ostream& out) {
  const std::vector<Stv> stimuli = to_vector(read_stimuli_file(o.stimuli_path));
  out << (will_vertex_be_activated(o.vertex, o.time, stimuli) ? "true" : "false") << '\n';
}

void cmd_factorize(const Options& o, std::ostream& out) {
  const StvSet stimuli = read_stimuli_file(o.stimuli_path);
  const ActivationDiagram d = activation_closure(choose_network(o, stimuli), stimuli, o.horizon);
  out << factorization_to_json(factorize(d)).dump() << '\n';
}

void cmd_count(const Options& o, std::ostream& out) {
  const StackProfile profile = StackProfile::parse(o.profile);
  const BigCount brute = count_chinampas(o.n, profile);
  const std::string closed = closed_form_for(o.n, profile);
  const std::string match = closed == "NA" ? "NA" : (brute.str() == closed ? "true" : "false");
  out << "n\tprofile\tbrute_force\tclosed_form\tmatch\n";
  out << o.n << '\t' << profile.to_string() << '\t' << brute << '\t' << closed << '\t' << match << '\n';
}

void cmd_series(const Options& o, std::ostream& out) {
  if (o.terms < 1) throw Error(ErrorKind::domain, "--terms must be positive");
  std::vector<BigCount> coeffs;
  if (o.family == "triseq") {
    coeffs = expand_rational_series(o.R, std::max(o.terms - 1, triseq_series(o.R).shift));
    coeffs.resize(o.terms);
  } else {
    switch (parse_family(o.family)) {
      case Family::profit0:
        for (int n = 0; n < o.terms; ++n) coeffs.push_back(profit0_closed_form(n));
        break;
      case Family::profit1: coeffs = profit1_series(o.terms); break;
      case Family::pyr2_chains:
        for (int n = 0; n < o.terms; ++n) coeffs.push_back(BigCount(1) << n);
        break;
      case Family::repeated_pyramid:
        throw Error(ErrorKind::domain, "no series for the repeated-pyramid family");
    }
  }
  out << "n\tcoefficient\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << '\t' << coeffs[n] << '\n';
}

void cmd_triseq(const Options& o, std::ostream& out) {
  if (o.series) {
    const std::vector<BigCount> coeffs = expand_rational_series(o.R, *o.series);
    out << "n\tcoefficient\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << '\t' << coeffs[n] << '\n';
    return;
  }
  if (o.list) {
    bool first = true;
    for (const TriangularSeq& s : list_triseq(o.K, o.R)) {
      if (!first) out << '\n';
      out << s.layout();
      first = false;
    }
    return;
  }
  out << enumerate_triseq_parallel(o.K, o.R) << '\n';
}

void cmd_persist(const Options& o, std::ostream& out) {
  const Network network = read_network_file(o.network_path);
  const VertexSet S = parse_set(o.set);
  const PersistenceSchedule schedule = schedule_infinite(network, S);
  const StvSet baseline = synfire_schedule(network, S);
  const int horizon = o.horizon.value_or(default_persistence_horizon(schedule.M));
  const bool ok = verify_persistence(network, schedule.stimuli, S, horizon);
  out << "M\t" << schedule.M << '\n'
      << "stimuli\t" << schedule.stimuli.size() << '\n'
      << "baseline\t" << baseline.size() << '\n'
      << "persistent\t" << (ok ? "true" : "false") << '\n';
}

void cmd_normalize(const Options& o, std::ostream& out) {
  const StvSet stimuli = read_stimuli_file(o.stimuli_path);
  const StimulusConfig input{*o.width, stimuli};
  const StimulusConfig normal = normalize_e(input);
  Json doc;
  doc["normalized"] = stimuli_to_json(normal.stimuli);
  doc["redundant"] = normal.stimuli != stimuli;
  out << doc.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  apply_thread_cap();
  Options o;
  CLI::App app{"Threshold cascades on paths and small networks", "chinampa"};
  app.require_subcommand(1);
  app.add_option("--out", o.out_path, "Write output to FILE");

  auto* simulate = app.add_subcommand("simulate", "Run the firing rule and print the activation");
  simulate->add_option("--network", o.network_path, "Network JSON (default: path)");
  simulate->add_option("--stimuli", o.stimuli_path, "Stimuli JSON")->required();
  simulate->add_option("--width", o.width, "Width of the default path");
  simulate->add_option("--horizon", o.horizon, "Last simulated time");
  simulate->add_option("--render", o.render, "ascii or svg");

  auto* query = app.add_subcommand("query", "Ask whether a vertex fires at a time");
  query->add_option("--stimuli", o.stimuli_path, "Stimuli JSON")->required();
  query->add_option("--vertex", o.vertex, "Vertex id")->required();
  query->add_option("--time", o.time, "Time")->required();

  auto* fact = app.add_subcommand("factorize", "Split a chinampa into stacked pyramids");
  fact->add_option("--stimuli", o.stimuli_path, "Stimuli JSON")->required();
  fact->add_option("--width", o.width, "Path width");
  fact->add_option("--horizon", o.horizon, "Last simulated time");

  auto* count = app.add_subcommand("count", "Count chinampas inside apyr(n)");
  count->add_option("--n", o.n, "Canvas size")->required();
  count->add_option("--profile", o.profile, "Pyramid counts, L:C[,L:C]");

  auto* series = app.add_subcommand("series", "Print generating-function coefficients");
  series->add_option("--family", o.family, "profit0, profit1, pyr2 or triseq")->required();
  series->add_option("--R", o.R, "Root length for triseq");
  series->add_option("--terms", o.terms, "Number of coefficients");

  auto* triseq = app.add_subcommand("triseq", "Triangular sequences");
  triseq->add_option("--R", o.R, "Rows")->required();
  triseq->add_option("--K", o.K, "Spread");
  triseq->add_flag("--list", o.list, "Print every sequence");
  triseq->add_flag("--count", o.count, "Print the number of sequences");
  triseq->add_option("--series", o.series, "Expand the stored series up to x^N");

  auto* persist = app.add_subcommand("persist", "Build and check a persistent stimulus schedule");
  persist->add_option("--network", o.network_path, "Network JSON")->required();
  persist->add_option("--set", o.set, "Comma-separated vertices")->required();
  persist->add_option("--horizon", o.horizon, "Last checked time");

  auto* normalize = app.add_subcommand("normalize", "Drop redundant stimuli");
  normalize->add_option("--stimuli", o.stimuli_path, "Stimuli JSON")->required();
  normalize->add_option("--width", o.width, "Path width")->required();

  auto* render = app.add_subcommand("render", "Draw the activation grid");
  render->add_option("--network", o.network_path, "Network JSON (default: path)");
  render->add_option("--stimuli", o.stimuli_path, "Stimuli JSON")->required();
  render->add_option("--width", o.width, "Width of the default path");
  render->add_option("--horizon", o.horizon, "Last simulated time");
  render->add_option("--render", o.render, "ascii or svg");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  std::ostringstream buffer;
  try {
    if (simulate->parsed()) cmd_simulate(o, buffer);
    else if (query->parsed()) cmd_query(o, buffer);
    else if (fact->parsed()) cmd_factorize(o, buffer);
    else if (count->parsed()) cmd_count(o, buffer);
    else if (series->parsed()) cmd_series(o, buffer);
    else if (triseq->parsed()) cmd_triseq(o, buffer);
    else if (persist->parsed()) cmd_persist(o, buffer);
    else if (normalize->parsed()) cmd_normalize(o, buffer);
    else if (render->parsed()) cmd_render(o, buffer);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.kind() == ErrorKind::parse ? kExitInput : kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "cannot write " << o.out_path << '\n';
      return kExitInput;
    }
    file << buffer.str();
  }
  return kExitOk;
}

}  // namespace chinampa
