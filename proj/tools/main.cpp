#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "gelfand/analysis.hpp"
#include "gelfand/report.hpp"
#include "render.hpp"

using namespace gelfand;
using gelfand::cli::Format;

namespace {

enum Exit { ok = 0, verification_failed = 1, invalid = 2, too_large = 3 };

struct Outcome {
  int exit = ok;
  Json result;
};

struct Settings {
  std::uint64_t max_size = kDefaultMaxGroupSize;
  unsigned threads = 1;
};

Json window_list(const std::vector<ColoredPermutation>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_window(x));
  return j;
}

template <class T>
Json orbit_json(const OrbitClass<T>& cls) {
  Json j;
  j["representative"] = to_json(cls.representative);
  j["orbit_size"] = cls.orbit_size;
  j["stabilizer"] = cls.stabilizer;
  return j;
}

Outcome cmd_enumerate(const GroupParams& params, const Settings& s) {
  const ProjectiveGroup group(params, s.max_size);
  Json j;
  j["group"] = to_json(params);
  j["order"] = group.size();
  j["classes"] = Json::array();
  for (const auto& cls : group.conjugacy_classes()) {
    Json c;
    c["rep"] = to_window(group[cls.representative]);
    c["size"] = cls.size;
    j["classes"].push_back(std::move(c));
  }
  j["elements"] = window_list(group.elements());
  return {ok, j};
}

Outcome cmd_involutions(const GroupParams& params, const Settings& s) {
  const auto invs = absolute_involutions(params, s.max_size);
  std::uint64_t sym = 0, asym = 0;
  Json list = Json::array();
  for (const auto& v : invs) {
    const auto cls = symmetry_class(v.lift);
    (cls == SymmetryClass::symmetric ? sym : asym)++;
    Json e;
    e["element"] = to_window(v.lift);
    e["symmetry"] = to_string(cls);
    list.push_back(std::move(e));
  }
  Json j;
  j["group"] = to_json(params);
  j["count"] = invs.size();
  j["symmetric"] = sym;
  j["antisymmetric"] = asym;
  j["formula"] = involution_count_formula(params);
  j["involutions"] = std::move(list);
  return {ok, j};
}

Outcome cmd_classify(const GroupParams& params, const Settings&) {
  const auto verdict = classify(params);
  Json j;
  j["group"] = to_json(params);
  j["involutory"] = verdict.involutory;
  j["branch"] = verdict.branch;
  j["gcd"] = gcd(params.p, params.n);
  return {ok, j};
}

Outcome cmd_dimension(const GroupParams& params, const Settings&) {
  Json j;
  j["group"] = to_json(params);
  j["dimension"] = model_dimension(params);
  j["shape_classes"] = Json::array();
  for (const auto& cls : irreducible_shape_classes(params)) {
    Json c;
    c["shape"] = to_string(cls.shape.representative);
    c["orbit_size"] = cls.shape.orbit_size;
    c["stabilizer"] = cls.shape.stabilizer;
    c["irreducible_dimension"] = cls.irreducible_dimension;
    j["shape_classes"].push_back(std::move(c));
  }
  return {ok, j};
}

Outcome cmd_character(const GroupParams& params, Action action, const Settings& s) {
  check_action(action, params);
  const ProjectiveGroup group(params, s.max_size);
  check_size(params.dual(), s.max_size);
  const ModelSpace space(params, s.max_size);
  const auto chi = character(group, space, action, Block::all, s.threads);
  Json j;
  j["group"] = to_json(params);
  j["action"] = to_string(action);
  j["dimension"] = space.dimension();
  j["classes"] = to_json(chi)["classes"];
  return {ok, j};
}

Outcome cmd_rsk(const GroupParams& params, const std::string& window, const Settings&) {
  const auto element = canonicalize(params, parse_window(params.r, window));
  const auto pq = rs_wreath(element.lift);
  const auto proj = rs_projective(element);
  Json j;
  j["group"] = to_json(params);
  j["element"] = to_window(element.lift);
  j["shape"] = to_json(pq.P.shape());
  j["P"] = to_json(pq.P);
  j["Q"] = to_json(pq.Q);
  Json pj;
  pj["P"] = orbit_json(proj.P);
  pj["Q"] = orbit_json(proj.Q);
  pj["shape_P"] = orbit_json(proj.shape_P);
  pj["shape_Q"] = orbit_json(proj.shape_Q);
  j["projective"] = std::move(pj);
  return {ok, j};
}

Outcome cmd_verify(const GroupParams& params, Action action, const Settings& s) {
  VerifyOptions opts;
  opts.action = action;
  opts.max_size = s.max_size;
  opts.threads = s.threads;
  const auto report = verify_model(params, opts);
  return {report.passed() ? ok : verification_failed, to_json(report)};
}

Outcome cmd_conjecture(int r, int p, int n, const Settings& s) {
  VerifyOptions opts;
  opts.max_size = s.max_size;
  opts.threads = s.threads;
  const auto report = conjecture_check(r, p, n, opts);
  return {report.passed() ? ok : verification_failed, to_json(report)};
}

Outcome cmd_example_g39(const Settings&) {
  const auto g = parse_window(3, "[(1,4),(2,2),(0,8),(2,1),(1,5),(0,7),(0,6),(2,9),(1,3)]");
  const auto cycles = cycle_decomposition(g);
  const auto partitions = pi21(cycles);
  const std::uint64_t expected = 54;

  Json cj = Json::array();
  for (const auto& c : cycles) {
    Json e;
    Json support = Json::array();
    for (int i : c.support) support.push_back(i + 1);
    e["support"] = std::move(support);
    e["colors"] = c.colors;
    e["color"] = c.color();
    cj.push_back(std::move(e));
  }
  Json pj = Json::array();
  for (const auto& pi : partitions) {
    Json e;
    e["partition"] = to_string(pi);
    e["even_singleton"] = has_even_singleton(cycles, pi);
    e["weight"] = pair_weight(cycles, pi);
    pj.push_back(std::move(e));
  }

  const FixSetting setting{3, 1, 1};
  const auto brute = fix_decompose_brute(g, setting);
  const auto table = fix_decompose_table(g, setting);
  const auto trace_brute = fix_trace(brute);
  const auto trace_table = fix_trace(table);
  const auto formula = asr_count(g);
  const auto target = Cyclotomic::from_int(3, static_cast<std::int64_t>(expected));
  const bool passed = cycles.size() == 5 && partitions.size() == 4 && formula == expected &&
                      trace_brute == target && trace_table == target;

  Json j;
  j["element"] = to_window(g);
  j["cycles"] = std::move(cj);
  j["partitions"] = std::move(pj);
  j["formula"] = formula;
  j["fix_size"] = brute.size();
  j["trace_brute"] = to_json(trace_brute);
  j["trace_table"] = to_json(trace_table);
  j["expected"] = expected;
  j["passed"] = passed;
  return {passed ? ok : verification_failed, j};
}

Json error_json(const std::string& kind, const std::string& message) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact models for projective complex reflection groups G(r,p,q,n)"};
  app.set_version_flag("--version", std::string(GELFAND_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::string cache_dir = cli::default_cache_dir().string();
  bool no_cache = false;
  Settings settings;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cache_dir, "Result cache directory")->envname("GELFAND_CACHE_DIR");
  app.add_flag("--no-cache", no_cache, "Neither read nor write the cache");
  app.add_option("--max-group-size", settings.max_size, "Refuse groups larger than this")->capture_default_str();
  app.add_option("--threads", settings.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  GroupParams params;
  int cr = 1, cp = 1, cn = 1;
  std::string action_name = "main";
  std::string element;
  std::string key_args;
  std::function<Outcome()> run;

  auto with_params = [&](CLI::App* sub) {
    sub->add_option("r", params.r)->required();
    sub->add_option("p", params.p)->required();
    sub->add_option("q", params.q)->required();
    sub->add_option("n", params.n)->required();
  };
  auto with_action = [&](CLI::App* sub) {
    sub->add_option("--action", action_name, "apr, modgrn or main")
        ->check(CLI::IsMember({"apr", "modgrn", "main"}))
        ->capture_default_str();
  };

  auto* enumerate = app.add_subcommand("enumerate", "Elements and conjugacy classes");
  with_params(enumerate);
  enumerate->callback([&] { run = [&] { return cmd_enumerate(params, settings); }; });

  auto* involutions = app.add_subcommand("involutions", "Absolute involutions");
  with_params(involutions);
  involutions->callback([&] { run = [&] { return cmd_involutions(params, settings); }; });

  auto* classify_cmd = app.add_subcommand("classify", "Whether the group is involutory");
  with_params(classify_cmd);
  classify_cmd->callback([&] { run = [&] { return cmd_classify(params, settings); }; });

  auto* dimension = app.add_subcommand("dimension", "Model dimension from shape classes");
  with_params(dimension);
  dimension->callback([&] { run = [&] { return cmd_dimension(params, settings); }; });

  auto* character_cmd = app.add_subcommand("character", "Character of a model");
  with_params(character_cmd);
  with_action(character_cmd);
  character_cmd->callback([&] {
    key_args = action_name;
    run = [&] { return cmd_character(params, parse_action(action_name), settings); };
  });

  auto* rsk = app.add_subcommand("rsk", "Robinson-Schensted pair of an element");
  with_params(rsk);
  rsk->add_option("--element", element, "Element in window notation")->required();
  rsk->callback([&] {
    key_args = element;
    run = [&] { return cmd_rsk(params, element, settings); };
  });

  auto* verify = app.add_subcommand("verify", "Verify a model");
  with_params(verify);
  with_action(verify);
  verify->callback([&] {
    key_args = action_name;
    run = [&] { return cmd_verify(params, parse_action(action_name), settings); };
  });

  auto* conjecture = app.add_subcommand("conjecture", "Symmetric/antisymmetric splitting checks on G(r,p,n)");
  conjecture->add_option("r", cr)->required();
  conjecture->add_option("p", cp)->required();
  conjecture->add_option("n", cn)->required();
  conjecture->callback([&] {
    params = {cr, cp, 1, cn};
    run = [&] { return cmd_conjecture(cr, cp, cn, settings); };
  });

  auto* example = app.add_subcommand("example-g39", "Worked example in G(3,9)");
  example->callback([&] {
    params = {3, 1, 1, 9};
    run = [&] { return cmd_example_g39(settings); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : invalid;
  }

  const auto format = cli::parse_format(format_name);
  const std::string name = app.get_subcommands().front()->get_name();
  std::ostringstream key;
  key << name << '|' << params.r << ',' << params.p << ',' << params.q << ',' << params.n << '|' << key_args << '|'
      << settings.max_size << '|' << GELFAND_VERSION;
  const cli::ResultCache cache(cache_dir, !no_cache);

  Outcome outcome;
  if (auto hit = cache.load(key.str())) {
    try {
      const auto envelope = Json::parse(*hit);
      if (envelope.at("key").get<std::string>() != key.str()) throw Json::other_error::create(0, "key", nullptr);
      outcome = {envelope.at("exit").get<int>(), envelope.at("result")};
    } catch (const Json::exception&) {
      hit.reset();
    }
    if (hit) {
      std::cout << cli::render(outcome.result, format);
      return outcome.exit;
    }
  }

  try {
    params.validate();
    outcome = run();
  } catch (const InvalidParameters& e) {
    std::cerr << "gelfand: " << e.what() << "\n";
    std::cout << cli::render(error_json("invalid parameters", e.what()), format);
    return invalid;
  } catch (const SizeBoundError& e) {
    std::cerr << "gelfand: " << e.what() << "\n";
    std::cout << cli::render(error_json("size bound exceeded", e.what()), format);
    return too_large;
  }

  Json envelope;
  envelope["key"] = key.str();
  envelope["exit"] = outcome.exit;
  envelope["result"] = outcome.result;
  try {
    cache.store(key.str(), envelope.dump());
  } catch (const std::exception& e) {
    std::cerr << "gelfand: cache write failed: " << e.what() << "\n";
  }
  std::cout << cli::render(outcome.result, format);
  return outcome.exit;
}
