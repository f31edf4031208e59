#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

#include "erg/reflexion.hpp"
#include "erg/solver.hpp"

namespace erg::cli {
namespace {

Report ok(std::string out) { return {kOk, std::move(out), {}}; }
Report fail(int code, const std::string& message) { return {code, {}, message}; }

// Maps engine errors to exit codes.
Report guarded(const std::function<Report()>& body) {
  try {
    return body();
  } catch (const NotDecomposable& e) {
    return fail(kNotDecomposable, e.what());
  } catch (const Error& e) {
    return fail(kScenarioError, e.what());
  }
}

std::string label(const Alternative& a) {
  std::string out = a.to_string();
  if (a.width() == 3) out += " " + std::string(pad::name(pad::decode(a)));
  return out;
}

bool is_member(const Scenario& sc, const std::string& id) {
  return Subject::is_valid_id(id) &&
         std::find(sc.subjects.begin(), sc.subjects.end(), Subject(id)) != sc.subjects.end();
}

void render_strata(const StratificationTree& t, int depth, std::string& out) {
  out.append(2 * static_cast<std::size_t>(depth), ' ');
  out += "[" + t.stratum.to_string() + "]\n";
  for (const auto& c : t.children) render_strata(c, depth + 1, out);
}

}  // namespace

Report run_decompose(const Scenario& sc, bool strata) {
  return guarded([&] {
    const PolynomialExpr p = sc.group();
    std::string out = p.to_string() + "\n";
    if (strata) render_strata(stratify(p), 0, out);
    return ok(std::move(out));
  });
}

Report run_solve(const Scenario& sc) {
  return guarded([&] {
    const PolynomialExpr p = sc.group();
    // Each equation needs every other subject's influence.
    std::vector<std::string> symbolic;
    for (const auto& s : p.subjects()) {
      if (sc.is_symbolic(s)) symbolic.push_back(s.id());
    }
    if (symbolic.size() > 1 || (symbolic.size() == 1 && p.subjects().size() > 1)) {
      std::string names;
      for (const auto& n : symbolic) names += (names.empty() ? "" : ", ") + n;
      return fail(kScenarioError, "solve needs concrete influences; symbolic: " + names);
    }
    const GroupSolution sol = solve_group(p, sc.concrete_influences(), sc.width);
    std::string out;
    bool unsolved = false;
    for (const auto& [s, r] : sol) {
      out += describe(s, r) + "\n";
      unsolved = unsolved || !r.has_solution();
    }
    if (unsolved) return Report{kNoSolution, out, "some subjects have no solution"};
    return ok(std::move(out));
  });
}

Report run_images(const Scenario& sc, const std::string& subject) {
  if (!is_member(sc, subject)) return fail(kBadFlags, "--subject '" + subject + "' is not in the group");
  return guarded([&] {
    const DiagonalForm d = build_diagonal(sc.group());
    return ok(render_images(annotate_images(d, sc.concrete_influences(), Subject(subject), sc.width)));
  });
}

Report run_control(const Scenario& sc, const std::string& controller, const std::string& target,
                   const std::string& state) {
  if (!is_member(sc, controller)) {
    return fail(kBadFlags, "--controller '" + controller + "' is not in the group");
  }
  if (!is_member(sc, target)) return fail(kBadFlags, "--target '" + target + "' is not in the group");
  if (controller == target) return fail(kBadFlags, "--controller and --target must differ");
  Alternative desired;
  try {
    desired = parse_state(state, sc.width);
  } catch (const Error& e) {
    return fail(kBadFlags, std::string("--state: ") + e.what());
  }
  return guarded([&] {
    const auto found = control_search(sc.group(), Subject(controller), Subject(target), desired,
                                      sc.concrete_influences());
    std::string out = "controller " + controller + ", target " + target + ", desired " +
                      label(desired) + "\n";
    out += "admissible influences (" + std::to_string(found.size()) + "):";
    if (found.empty()) out += " none";
    out += "\n";
    for (const auto& v : found) out += "  " + label(v) + "\n";
    return ok(std::move(out));
  });
}

Report run_pad_quantize(const pad::PadTriple& t) {
  try {
    return ok(label(pad::quantize(t)) + "\n");
  } catch (const Error& e) {
    return fail(kBadFlags, e.what());
  }
}

Report run_pad_encode(const std::string& name) {
  try {
    return ok(pad::describe(pad::from_name(name)) + "\n");
  } catch (const Error& e) {
    return fail(kBadFlags, e.what());
  }
}

Report run_pad_decode(const std::string& code) {
  try {
    const Alternative a = parse_state(code, 3);
    std::string out = pad::describe(pad::decode(a)) + " =";
    const auto basis = pad::basis_decompose(a);
    if (basis.empty()) out += " (no basis state)";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      out += (i == 0 ? " " : " + ") + std::string(pad::name(basis[i]));
    }
    return ok(out + "\n");
  } catch (const Error& e) {
    return fail(kBadFlags, e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflexive games over PAD emotional states"};
  app.require_subcommand(1);

  std::string scenario_path;
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", scenario_path, "Scenario file")->required();
  };

  bool strata = false;
  auto* decompose = app.add_subcommand("decompose", "Print the group polynomial");
  add_scenario(decompose);
  decompose->add_flag("--strata", strata, "Also print the stratification tree");

  auto* solve = app.add_subcommand("solve", "Solve every subject's decision equation");
  add_scenario(solve);

  std::string subject;
  auto* images = app.add_subcommand("images", "Print a subject's image hierarchy");
  add_scenario(images);
  images->add_option("--subject", subject, "Viewpoint subject")->required();

  std::string controller, target, state;
  auto* control = app.add_subcommand("control", "Search controlling influences");
  add_scenario(control);
  control->add_option("--controller", controller, "Subject whose influence is chosen")->required();
  control->add_option("--target", target, "Subject to steer")->required();
  control->add_option("--state", state, "Desired state: emotion name or brace code")->required();

  auto* pad_cmd = app.add_subcommand("pad", "PAD emotional state utilities");
  pad_cmd->require_subcommand(1);
  std::vector<double> triple;
  auto* quantize = pad_cmd->add_subcommand("quantize", "Map a PAD triple to a basic state");
  quantize->add_option("values", triple, "pleasure arousal dominance")->required()->expected(3);
  std::string pad_arg;
  auto* encode = pad_cmd->add_subcommand("encode", "Code of an emotion name");
  encode->add_option("name", pad_arg)->required();
  auto* decode = pad_cmd->add_subcommand("decode", "Emotion and basis states of a code");
  decode->add_option("code", pad_arg)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFlags;
  }

  Report report;
  if (pad_cmd->parsed()) {
    if (quantize->parsed()) {
      report = run_pad_quantize({triple.at(0), triple.at(1), triple.at(2)});
    } else if (encode->parsed()) {
      report = run_pad_encode(pad_arg);
    } else {
      report = run_pad_decode(pad_arg);
    }
  } else {
    Scenario sc;
    try {
      sc = load_scenario(scenario_path);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kScenarioError;
    }
    if (decompose->parsed()) {
      report = run_decompose(sc, strata);
    } else if (solve->parsed()) {
      report = run_solve(sc);
    } else if (images->parsed()) {
      report = run_images(sc, subject);
    } else {
      report = run_control(sc, controller, target, state);
    }
  }
  out << report.out;
  if (!report.err.empty()) err << "error: " << report.err << "\n";
  return report.exit_code;
}

}  // namespace erg::cli
