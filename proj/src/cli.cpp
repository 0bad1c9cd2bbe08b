#include "itlog/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>

#include <json.hpp>

#include "itlog/errors.hpp"
#include "itlog/json_io.hpp"
#include "itlog/oracle.hpp"
#include "itlog/random.hpp"
#include "itlog/rform.hpp"
#include "itlog/series.hpp"
#include "itlog/text.hpp"

namespace itlog {

namespace {

using nlohmann::json;

struct LevelRange {
  Level first = 0;
  Level last = 0;
};

// "a..b", inclusive, a <= b.
LevelRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw CLI::ValidationError("--levels", "expected a..b, got " + text);
  auto to_level = [&](std::string_view part) {
    Level v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw CLI::ValidationError("--levels", "bad level '" + std::string(part) + "'");
    return v;
  };
  const std::string_view view(text);
  LevelRange r{to_level(view.substr(0, dots)), to_level(view.substr(dots + 2))};
  if (r.first > r.last) throw CLI::ValidationError("--levels", "empty range " + text);
  return r;
}

// CLI11 reads "-5..5" as an option name; glue such values onto their flag.
std::vector<std::string> attach_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const bool is_long_flag = a.rfind("--", 0) == 0 && a.find('=') == std::string::npos;
    if (is_long_flag && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) || args[i + 1][1] == '.')) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

struct Outcome {
  json parameters = json::object();
  json result;
  std::string text;
  std::vector<Report> verdicts;
};

void add_verdict_text(Outcome& o) {
  std::size_t passed = 0;
  for (const auto& r : o.verdicts) {
    o.text += summarize(r) + "\n";
    if (r.pass) ++passed;
  }
  o.text += std::to_string(passed) + "/" + std::to_string(o.verdicts.size()) + " passed\n";
}

}  // namespace

int run_command(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus of formal iterated logarithms and exponentials", "itlog-cli"};
  app.require_subcommand(1);

  std::string format = "text";
  std::uint64_t seed = 20240101;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::function<Outcome()> action;
  std::string command;

  // expand
  Level level = 0;
  unsigned order = 0;
  auto* expand = app.add_subcommand("expand", "Print translate(l_n, N) = l_n(x+y) to order N");
  expand->add_option("--level", level, "Level n")->required();
  expand->add_option("--order", order, "Truncation order N")->required();
  expand->callback([&] {
    command = "expand";
    action = [&] {
      Outcome o;
      const YSeries s = translate(Element::level(level), order);
      o.parameters = {{"level", level}, {"order", order}};
      o.result = to_json(s);
      o.text = format_series(s) + "\n";
      return o;
    };
  });

  // derive
  std::string expr_text;
  unsigned times = 1;
  auto* derive_cmd = app.add_subcommand("derive", "Apply d/dx to an element");
  derive_cmd->add_option("--expr", expr_text, "Element, e.g. \"3/2*l(1)^2*l(0)^-1\"")->required();
  derive_cmd->add_option("--times", times, "Number of applications")->capture_default_str();
  derive_cmd->callback([&] {
    command = "derive";
    action = [&] {
      Outcome o;
      const Element e = derive_n(parse_element(expr_text), times);
      o.parameters = {{"expr", expr_text}, {"times", times}};
      o.result = to_json(e);
      o.text = format_element(e) + "\n";
      return o;
    };
  });

  // verify ...
  auto* verify = app.add_subcommand("verify", "Exact identity sweeps");
  verify->require_subcommand(1);
  std::string levels_text;
  bool exp_form = false;
  unsigned max_m = 1;
  unsigned count = 100;

  auto* recursion = verify->add_subcommand("recursion", "Log (or exp) recursion identity");
  recursion->add_option("--levels", levels_text, "Inclusive range a..b")->required();
  recursion->add_option("--order", order, "Truncation order N")->required();
  recursion->add_flag("--exp-form", exp_form, "Check the exponential form instead");
  recursion->callback([&] {
    command = "verify recursion";
    action = [&] {
      Outcome o;
      const LevelRange range = parse_range(levels_text);
      o.parameters = {{"levels", levels_text}, {"order", order}, {"exp_form", exp_form}};
      for (Level n = range.first; n <= range.last; ++n)
        o.verdicts.push_back(exp_form ? verify_exp_recursion(n, order)
                                      : verify_log_recursion(n, order));
      return o;
    };
  });

  auto* limits = verify->add_subcommand("limits", "lim_{r->0} (d/dx)^m l_n^r/r = (d/dx)^m l_{n+1}");
  limits->add_option("--levels", levels_text, "Inclusive range a..b")->required();
  limits->add_option("--max-m", max_m, "Largest derivative order M")
      ->required()
      ->check(CLI::PositiveNumber);
  limits->callback([&] {
    command = "verify limits";
    action = [&] {
      Outcome o;
      const LevelRange range = parse_range(levels_text);
      o.parameters = {{"levels", levels_text}, {"max_m", max_m}};
      for (Level n = range.first; n <= range.last; ++n)
        for (unsigned m = 1; m <= max_m; ++m) o.verdicts.push_back(verify_itloglim(n, m));
      return o;
    };
  });

  auto* translated = verify->add_subcommand("translated", "Per-coefficient limit of the translation");
  translated->add_option("--levels", levels_text, "Inclusive range a..b")->required();
  translated->add_option("--order", order, "Truncation order N")->required();
  translated->callback([&] {
    command = "verify translated";
    action = [&] {
      Outcome o;
      const LevelRange range = parse_range(levels_text);
      o.parameters = {{"levels", levels_text}, {"order", order}};
      for (Level n = range.first; n <= range.last; ++n)
        o.verdicts.push_back(verify_translated_limit(n, order));
      return o;
    };
  });

  auto* commute = verify->add_subcommand("commute", "lim and d/dx commute on random forms");
  commute->add_option("--count", count, "Number of random forms")->capture_default_str();
  commute->callback([&] {
    command = "verify commute";
    action = [&] {
      Outcome o;
      o.parameters = {{"count", count}, {"seed", seed}};
      Rng rng(seed);
      for (unsigned i = 0; i < count; ++i) o.verdicts.push_back(verify_lim_derive_commute(random_rform(rng)));
      return o;
    };
  });

  // reduce / limit
  std::string rform_text;
  auto* reduce = app.add_subcommand("reduce", "Reduced form of a formal polynomial form");
  reduce->add_option("--rform", rform_text, "Form, e.g. \"r*l(0)^r + (1-r)*l(1)^(r-1)\"")->required();
  reduce->callback([&] {
    command = "reduce";
    action = [&] {
      Outcome o;
      const RForm f = rform_reduce(parse_rform(rform_text));
      o.parameters = {{"rform", rform_text}};
      o.result = to_json(f);
      o.text = format_rform(f) + "\n";
      return o;
    };
  });
  auto* limit = app.add_subcommand("limit", "lim_{r->0} of a formal polynomial form");
  limit->add_option("--rform", rform_text, "Form in r")->required();
  limit->callback([&] {
    command = "limit";
    action = [&] {
      Outcome o;
      const Element e = rform_limit(parse_rform(rform_text));
      o.parameters = {{"rform", rform_text}};
      o.result = to_json(e);
      o.text = format_element(e) + "\n";
      return o;
    };
  });

  // crosscheck
  std::optional<double> x0;
  double y0 = 1e-3;
  double tol = 1e-9;
  auto* crosscheck = app.add_subcommand("crosscheck", "Numeric check of translate(l_n, N) at x0+y0");
  crosscheck->add_option("--level", level, "Level n")->required();
  crosscheck->add_option("--order", order, "Truncation order N")->required();
  crosscheck->add_option("--x0", x0, "Base point (default depends on level)");
  crosscheck->add_option("--y0", y0, "Increment")->capture_default_str();
  crosscheck->add_option("--tol", tol, "Relative tolerance")->capture_default_str();
  crosscheck->callback([&] {
    command = "crosscheck";
    action = [&] {
      Outcome o;
      SamplePoint p = default_sample_point(level, y0, tol);
      if (x0) p.x0 = *x0;
      o.parameters = {{"level", level}, {"order", order}, {"x0", p.x0}, {"y0", y0}, {"tol", tol}};
      o.verdicts.push_back(crosscheck_translate(level, order, p));
      return o;
    };
  });

  for (auto* sub : {expand, derive_cmd, verify, reduce, limit, crosscheck}) sub->fallthrough();
  for (auto* sub : {recursion, limits, translated, commute}) sub->fallthrough();

  try {
    std::vector<std::string> args = attach_negative_values(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  bool ok = true;
  for (const auto& r : outcome.verdicts) ok = ok && r.pass;
  if (!outcome.verdicts.empty()) add_verdict_text(outcome);

  if (format == "json") {
    json doc = {{"command", command}, {"parameters", outcome.parameters}, {"ok", ok}};
    if (!outcome.result.is_null()) doc["result"] = outcome.result;
    if (!outcome.verdicts.empty()) {
      json verdicts = json::array();
      for (const auto& r : outcome.verdicts) verdicts.push_back(to_json(r));
      doc["verdicts"] = std::move(verdicts);
    }
    out << doc.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return ok ? kExitPass : kExitVerdictFailed;
}

}  // namespace itlog
