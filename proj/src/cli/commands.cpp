#include "rpi/cli/commands.hpp"

#include "rpi/cli/known_sequences.hpp"
#include "rpi/elliptic.hpp"
#include "rpi/error.hpp"
#include "rpi/family.hpp"
#include "rpi/hankel.hpp"
#include "rpi/riordan.hpp"
#include "rpi/somos.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace rpi::cli {

namespace {

using json = nlohmann::json;

struct Output {
  std::string subject;
  std::vector<std::string> params;
  std::size_t order = 0;
  std::vector<std::string> values;
  json report = json::object();
  std::vector<std::string> plain;
  std::vector<std::string> csv;
};

std::vector<std::string> format_all(std::span<const Rational> v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string pair_text(const Rational& a, const Rational& b) {
  return "(" + format_rational(a) + ", " + format_rational(b) + ")";
}

// "p0+p1x" with the usual elisions.
std::string linear_text(const Rational& p0, const Rational& p1) {
  if (p1 == 0) return format_rational(p0);
  std::string out = p0 == 0 ? "" : format_rational(p0);
  if (p1 < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Rational mag = abs(p1);
  if (mag != 1) out += format_rational(mag);
  return out + "x";
}

void emit(const Output& o, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Plain:
      for (const auto& line : o.plain) out << line << '\n';
      break;
    case OutputFormat::Csv:
      for (const auto& line : o.csv) out << line << '\n';
      break;
    case OutputFormat::Json: {
      json j;
      j["subject"] = o.subject;
      j["params"] = o.params;
      j["order"] = o.order;
      j["values"] = o.values;
      j["report"] = o.report;
      out << j.dump(2) << '\n';
      break;
    }
  }
}

std::vector<std::string> index_value_csv(const std::vector<std::string>& values, std::size_t first_index) {
  std::vector<std::string> out{"index,value"};
  for (std::size_t i = 0; i < values.size(); ++i) out.push_back(std::to_string(first_index + i) + "," + values[i]);
  return out;
}

Output base_output(const Subject& s, std::size_t order) {
  Output o;
  o.subject = s.kind;
  o.params = format_all(s.kind == "terms" ? s.terms : s.params);
  o.order = order;
  return o;
}

int cmd_expand(const Subject& s, const RunConfig& cfg, std::ostream& out) {
  const Series series = subject_series(s, cfg.order);
  Output o = base_output(s, cfg.order);
  o.values = format_all(series.coeffs());
  o.plain = {join(o.values)};
  o.csv = index_value_csv(o.values, 0);
  emit(o, cfg.format, out);
  return exit_code::kSuccess;
}

std::vector<Rational> hankel_source(const Subject& s, std::size_t order) {
  if (s.kind == "terms") return s.terms;
  const Series series = subject_series(s, order);
  return {series.coeffs().begin(), series.coeffs().end()};
}

int cmd_hankel(const Subject& s, const RunConfig& cfg, std::ostream& out) {
  const std::vector<Rational> source = hankel_source(s, cfg.order);
  const HankelTransform h = hankel_transform(source);
  const std::size_t offset = std::min(cfg.offset.value_or(0), h.values.size());
  const std::span<const Rational> shown = std::span<const Rational>(h.values).subspan(offset);
  Output o = base_output(s, cfg.order);
  o.values = format_all(shown);
  o.report = {{"offset", offset}, {"source_length", h.source_length}};
  o.plain = {join(o.values)};
  o.csv = index_value_csv(o.values, offset);
  emit(o, cfg.format, out);
  return exit_code::kSuccess;
}

int cmd_somos(const Subject& s, const RunConfig& cfg, std::ostream& out) {
  std::vector<Rational> seq;
  std::optional<SomosParams> expected;
  std::size_t offset = cfg.offset.value_or(0);
  if (s.kind == "terms") {
    seq = s.terms;
  } else {
    Series source;
    if (s.kind == "family" || s.kind == "ad") {
      offset = cfg.offset.value_or(2);
      source = subject_series(s, cfg.order);
      if (s.kind == "family") expected = family_somos_params({s.params[0], s.params[1], s.params[2]});
    } else if (s.kind == "companion") {
      source = subject_series(s, cfg.order);
      expected = family_somos_params({s.params[0], s.params[1], s.params[2]});
    } else {
      // Both curve subjects test the Hankel transform of f.
      source = f_from_curve(s.params[0], cfg.order);
      expected = SomosParams{1, 1 - s.params[0]};
    }
    const HankelTransform h = hankel_transform(source.coeffs());
    offset = std::min(offset, h.values.size());
    seq.assign(h.values.begin() + static_cast<std::ptrdiff_t>(offset), h.values.end());
  }
  if (cfg.offset && s.kind == "terms") {
    offset = std::min(offset, seq.size());
    seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(offset));
  }

  const SomosParams fit = somos4_fit(seq);
  const SomosReport report = somos4_check(seq, fit);

  Output o = base_output(s, cfg.order);
  o.values = format_all(seq);
  o.plain.push_back("sequence: " + join(o.values));
  o.plain.push_back("fitted: " + pair_text(fit.alpha, fit.beta));
  o.report["alpha"] = format_rational(fit.alpha);
  o.report["beta"] = format_rational(fit.beta);
  o.report["offset"] = offset;
  if (expected) {
    const bool match = *expected == fit;
    o.plain.push_back("expected: " + pair_text(expected->alpha, expected->beta) + " match: " + (match ? "yes" : "no"));
    o.report["expected"] = {{"alpha", format_rational(expected->alpha)},
                            {"beta", format_rational(expected->beta)},
                            {"match", match}};
  }
  o.plain.push_back("verified: indices 4.." + std::to_string(seq.size() - 1) + " (" +
                    std::to_string(report.checked()) + " checks, " + std::to_string(report.failures.size()) +
                    " failures)");
  o.csv.push_back("index,status");
  std::vector<std::size_t> all = report.passed;
  all.insert(all.end(), report.failures.begin(), report.failures.end());
  std::sort(all.begin(), all.end());
  for (std::size_t n : all) {
    const bool pass = std::find(report.passed.begin(), report.passed.end(), n) != report.passed.end();
    o.plain.push_back("index " + std::to_string(n) + ": " + (pass ? "pass" : "FAIL"));
    o.csv.push_back(std::to_string(n) + "," + (pass ? "pass" : "fail"));
  }
  o.report["passed"] = report.passed;
  o.report["failures"] = report.failures;
  emit(o, cfg.format, out);
  return report.ok() ? exit_code::kSuccess : exit_code::kVerification;
}

int cmd_bseq(const Subject& s, const RunConfig& cfg, std::ostream& out) {
  Series g;
  std::optional<CurveBSequence> closed;
  if (s.kind == "curve") {
    g = pipeline(s.params[0], cfg.order).g;
    closed = b_from_curve(s.params[0]);
  } else {
    g = subject_series(s, cfg.order);
    if (s.kind == "family") {
      closed = CurveBSequence{s.params[0], -s.params[2], s.params[1]};
    } else if (s.kind == "ad") {
      closed = CurveBSequence{s.params[0], s.params[1], 0};
    }
  }
  const BSequence b = b_extract(g);

  Output o = base_output(s, cfg.order);
  o.values = format_all(b.b);
  o.plain.push_back("b: " + join(o.values));
  o.plain.push_back("certified: " + std::to_string(b.b.size()));
  o.report["certified"] = b.b.size();
  o.csv = index_value_csv(o.values, 0);
  int code = exit_code::kSuccess;
  if (closed) {
    const Series expansion = closed->expansion(b.b.size());
    const bool match = agree(expansion, b.as_series());
    const std::string text =
        "(" + linear_text(closed->num0, closed->num1) + ")/(" + linear_text(1, closed->den1) + ")";
    o.plain.push_back("closed form: " + text);
    o.plain.push_back(std::string("match: ") + (match ? "yes" : "no"));
    o.report["closed_form"] = text;
    o.report["match"] = match;
    if (!match) code = exit_code::kVerification;
  }
  emit(o, cfg.format, out);
  return code;
}

int cmd_prodmat(const Subject& s, const RunConfig& cfg, std::ostream& out) {
  const Series g = subject_series(s, cfg.order);
  const std::size_t size = cfg.order - 2;
  const Matrix p = production_matrix(RiordanArray::bell(g), size);
  Output o = base_output(s, cfg.order);
  o.report["size"] = size;
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < size; ++j) row.push_back(format_rational(p(i, j)));
    o.values.insert(o.values.end(), row.begin(), row.end());
    o.plain.push_back(join(row));
    o.csv.push_back(join(row, ","));
  }
  emit(o, cfg.format, out);
  return exit_code::kSuccess;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, const std::string& corrupt, std::ostream& out) {
  std::vector<CheckOutcome> outcomes;
  if (suite == "paper" || suite == "all") {
    std::vector<KnownSequence> table = known_sequences();
    if (!corrupt.empty()) {
      auto it = std::find_if(table.begin(), table.end(), [&](const KnownSequence& k) { return k.label == corrupt; });
      if (it == table.end()) throw Error(ErrorKind::InvalidArgument, "no known sequence labelled '" + corrupt + "'");
      it->prefix.front() += 1;
    }
    auto r = run_corpus_suite(table, known_somos_fits());
    outcomes.insert(outcomes.end(), r.begin(), r.end());
  }
  if (suite == "conjecture" || suite == "all") {
    auto r = run_conjecture_suite(cfg.seed, cfg.trials, cfg.order);
    outcomes.insert(outcomes.end(), r.begin(), r.end());
  }
  const auto passed = static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const CheckOutcome& c) { return c.pass; }));

  Output o;
  o.subject = "verify " + suite;
  o.params = {"seed=" + std::to_string(cfg.seed), "trials=" + std::to_string(cfg.trials)};
  o.order = cfg.order;
  json checks = json::array();
  o.csv.push_back("label,status,detail");
  for (const auto& c : outcomes) {
    o.values.push_back(c.pass ? "pass" : "fail");
    o.plain.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.label + (c.detail.empty() ? "" : ": " + c.detail));
    o.csv.push_back("\"" + c.label + "\"," + (c.pass ? "pass" : "fail") + ",\"" + c.detail + "\"");
    checks.push_back({{"label", c.label}, {"pass", c.pass}, {"detail", c.detail}});
  }
  o.plain.push_back("passed " + std::to_string(passed) + " of " + std::to_string(outcomes.size()));
  o.report = {{"checks", checks}, {"passed", passed}, {"total", outcomes.size()}};
  emit(o, cfg.format, out);
  return passed == outcomes.size() ? exit_code::kSuccess : exit_code::kVerification;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidArgument: return exit_code::kUsage;
    case ErrorKind::NoSomosFit: return exit_code::kVerification;
    default: return exit_code::kComputation;
  }
}

}  // namespace

std::vector<Rational> parse_terms(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty term list");
  return out;
}

Subject parse_subject(const std::vector<std::string>& words, const std::vector<Rational>& terms) {
  Subject s;
  if (words.empty()) {
    if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "a subject or --terms is required");
    s.kind = "terms";
    s.terms = terms;
    return s;
  }
  if (!terms.empty()) throw Error(ErrorKind::InvalidArgument, "give either a subject or --terms, not both");
  s.kind = words.front();
  std::size_t arity = 0;
  if (s.kind == "family" || s.kind == "companion") {
    arity = 3;
  } else if (s.kind == "ad") {
    arity = 2;
  } else if (s.kind == "curve" || s.kind == "curve-f") {
    arity = 1;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown subject '" + s.kind + "'");
  }
  if (words.size() != arity + 1) {
    throw Error(ErrorKind::InvalidArgument,
                "subject '" + s.kind + "' takes " + std::to_string(arity) + " parameters");
  }
  for (std::size_t i = 1; i < words.size(); ++i) s.params.push_back(parse_rational(words[i]));
  return s;
}

Series subject_series(const Subject& s, std::size_t order) {
  if (s.kind == "family") return g_family({s.params[0], s.params[1], s.params[2]}, order);
  if (s.kind == "companion") return companion({s.params[0], s.params[1], s.params[2]}, order);
  if (s.kind == "ad") return g_ad(s.params[0], s.params[1], order);
  if (s.kind == "curve") return pipeline(s.params[0], order).g;
  if (s.kind == "curve-f") return f_from_curve(s.params[0], order);
  if (s.kind == "terms") return Series::polynomial(s.terms, std::max(order, s.terms.size()));
  throw Error(ErrorKind::InvalidArgument, "unknown subject '" + s.kind + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Riordan pseudo-involution, Hankel and Somos-4 toolkit", "rpi"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "plain";
  std::vector<std::string> words;
  std::string terms_text;
  std::size_t offset = 0;
  std::string suite = "paper";
  std::string corrupt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "Truncation order N (default 32)")->check(CLI::Range(4, 4096));
    sub->add_option("--format", format, "plain | json | csv")->check(CLI::IsMember({"plain", "json", "csv"}));
  };
  auto subject = [&](CLI::App* sub) {
    sub->add_option("subject", words, "family a b c | ad a d | companion a b c | curve a | curve-f a");
    sub->add_option("--terms", terms_text, "Explicit comma-separated terms instead of a subject");
  };

  auto* expand = app.add_subcommand("expand", "Print coefficients 0..N-1");
  auto* hankel = app.add_subcommand("hankel", "Print the Hankel transform");
  auto* somos = app.add_subcommand("somos", "Fit and verify Somos-4 parameters");
  auto* bseq = app.add_subcommand("bseq", "Extract the certified B-sequence");
  auto* prodmat = app.add_subcommand("prodmat", "Print the production matrix of (g, xg) at size N-2");
  auto* verify = app.add_subcommand("verify", "Regression against embedded data or randomized conjecture checks");
  CLI::Option* offset_opt = nullptr;
  CLI::Option* somos_offset_opt = nullptr;
  for (auto* sub : {expand, hankel, somos, bseq, prodmat}) {
    common(sub);
    subject(sub);
  }
  offset_opt = hankel->add_option("--offset", offset, "First transform index to print");
  somos_offset_opt = somos->add_option("--offset", offset, "First index of the sequence to fit");
  common(verify);
  verify->add_option("suite", suite, "paper | conjecture | all")->check(CLI::IsMember({"paper", "conjecture", "all"}));
  verify->add_option("--seed", cfg.seed, "Random seed for the conjecture suite");
  verify->add_option("--trials", cfg.trials, "Random trials per conjecture family");
  verify->add_option("--corrupt", corrupt, "Perturb one embedded prefix (harness self-test)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kSuccess : exit_code::kUsage;
  }

  try {
    if (format == "json") cfg.format = OutputFormat::Json;
    if (format == "csv") cfg.format = OutputFormat::Csv;
    if (offset_opt->count() > 0 || somos_offset_opt->count() > 0) cfg.offset = offset;

    if (verify->parsed()) return cmd_verify(suite, cfg, corrupt, out);

    const std::vector<Rational> terms = terms_text.empty() ? std::vector<Rational>{} : parse_terms(terms_text);
    const Subject s = parse_subject(words, terms);
    if (expand->parsed()) return cmd_expand(s, cfg, out);
    if (hankel->parsed()) return cmd_hankel(s, cfg, out);
    if (somos->parsed()) return cmd_somos(s, cfg, out);
    if (bseq->parsed()) return cmd_bseq(s, cfg, out);
    if (prodmat->parsed()) return cmd_prodmat(s, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return exit_code::kUsage;
}

}  // namespace rpi::cli
