#include "hecke/cli.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "hecke/io.hpp"

namespace hecke::cli {

namespace {

constexpr int kOk = 0;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kInconclusive = 4;

int pseudo_euclid_cap() {
  const char* env = std::getenv("HECKE_MAX_ITER");
  if (env == nullptr) return 256;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 1000000)
    throw ParseError("HECKE_MAX_ITER must be a positive integer");
  return static_cast<int>(v);
}

struct Options {
  int p = 0;
  std::string input;
  int depth = 10;
  int max_len = 8;
  std::string format = "json";
  bool strict = false;
  bool serial = false;
  // ring operations
  std::vector<std::string> gcd_args, add_args, sub_args, mul_args, divide_args;
  std::string sign_arg, halve_arg;
};

void emit(const Json& j, const std::string& format, std::ostream& out) {
  if (format == "text") {
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    return;
  }
  out << j.dump() << "\n";
}

// Accepts either the matrix grammar or a word; words never start with '['.
GroupElement parse_element(const RingContext& ctx, const std::string& input) {
  std::size_t i = 0;
  while (i < input.size() && std::isspace(static_cast<unsigned char>(input[i]))) ++i;
  if (i < input.size() && input[i] == '[') return parse_matrix(ctx, input);
  return evaluate(parse_word(input, ctx.p()), ctx);
}

int run_ring(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  Json j;
  j["p"] = ctx.p();
  j["degree"] = ctx.degree();
  Json mp = Json::array();
  for (const Int& c : ctx.min_poly()) mp.push_back(c.str());
  j["min_poly"] = std::move(mp);
  const RatInterval iv = ctx.lambda_interval();
  j["lambda_interval"] = Json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}};

  auto one_arg = [&](const std::string& s) { return parse_ring_elem(ctx, s); };
  bool inconclusive = false;
  if (!opt.gcd_args.empty()) {
    auto g = pseudo_gcd(one_arg(opt.gcd_args[0]), one_arg(opt.gcd_args[1]));
    j["gcd"] = g.has_value() ? Json(to_text(*g)) : Json("non_termination");
    inconclusive = inconclusive || !g.has_value();
  }
  if (!opt.add_args.empty())
    j["add"] = to_text(one_arg(opt.add_args[0]) + one_arg(opt.add_args[1]));
  if (!opt.sub_args.empty())
    j["sub"] = to_text(one_arg(opt.sub_args[0]) - one_arg(opt.sub_args[1]));
  if (!opt.mul_args.empty())
    j["mul"] = to_text(one_arg(opt.mul_args[0]) * one_arg(opt.mul_args[1]));
  if (!opt.divide_args.empty()) {
    const PseudoDivision d =
        pseudo_divide(one_arg(opt.divide_args[0]), one_arg(opt.divide_args[1]));
    j["divide"] = Json{{"n", d.n.str()}, {"r", to_text(d.r)}};
  }
  if (!opt.sign_arg.empty()) {
    switch (sign_of(one_arg(opt.sign_arg))) {
      case Sign::Negative: j["sign"] = "negative"; break;
      case Sign::Zero: j["sign"] = "zero"; break;
      case Sign::Positive: j["sign"] = "positive"; break;
    }
  }
  if (!opt.halve_arg.empty()) {
    auto h = halve(one_arg(opt.halve_arg));
    j["halve"] = h.has_value() ? Json(to_text(*h)) : Json("not_divisible");
  }
  emit(j, opt.format, out);
  return inconclusive && opt.strict ? kInconclusive : kOk;
}

int run_member(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const GroupElement g = parse_element(ctx, opt.input);
  const Membership m = is_member(g);
  Json j;
  j["membership"] = membership_name(m);
  j["member"] = m == Membership::Undetermined ? Json(nullptr)
                                              : Json(m == Membership::Member);
  emit(j, opt.format, out);
  return m == Membership::Undetermined && opt.strict ? kInconclusive : kOk;
}

int run_classify(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const GroupElement g = parse_element(ctx, opt.input);
  const ElementClass cls = classify(g);
  Json j;
  j["kind"] = element_kind_name(cls.kind);
  j["order"] = cls.order.has_value() ? Json(*cls.order) : Json(nullptr);
  j["trace"] = to_text(g.trace());
  j["symmetric"] = is_symmetric_rep(g);
  j["theta"] = to_json(fixed_point_ratio(g));
  j["matrix"] = to_text(g);
  emit(j, opt.format, out);
  return kOk;
}

int run_word(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const Word w = parse_word(opt.input, opt.p);
  const GroupElement g = evaluate(w, ctx);
  Json j;
  j["word"] = to_text(w);
  j["matrix"] = to_text(g);
  j["kind"] = element_kind_name(classify(g).kind);
  emit(j, opt.format, out);
  return kOk;
}

int run_matrix(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const GroupElement g = parse_matrix(ctx, opt.input);
  const Word w = matrix_to_word(g);
  Json j;
  j["word"] = to_text(w);
  j["matrix"] = to_text(g);
  emit(j, opt.format, out);
  return kOk;
}

int run_reciprocal(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const GroupElement g = parse_element(ctx, opt.input);
  const ReciprocityVerdict v = is_reciprocal(g, opt.depth);
  emit(to_json(v), opt.format, out);
  return v.theta_search_exhausted && opt.strict ? kInconclusive : kOk;
}

int run_census(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  const GroupElement g = parse_element(ctx, opt.input);
  const Word w = matrix_to_word(g);
  if (classify(g).kind != ElementKind::Hyperbolic)
    throw std::invalid_argument("census: requires a hyperbolic element");
  const int p = ctx.p();
  const CyclicWord key = cyclic_reduce(w, p).cyclic;
  const Word key_word = Word::from_letters(key.letters(), p);
  if (!are_conjugate(key_word, inverse_word(key_word, p), p).conjugate)
    throw std::invalid_argument("census: requires a reciprocal element");
  GroupElement rep = evaluate(key_word, ctx);
  ClassRecord rec{key,
                  rep,
                  abs_embedding(rep.trace()),
                  is_primitive(key_word, ctx),
                  true,
                  std::nullopt,
                  std::nullopt,
                  {}};
  if (!rec.primitive)
    throw std::invalid_argument("census: requires a primitive element");
  rec.census = census(rec, opt.depth);
  rec.case_tag = classify_case(rec);

  Json j;
  j["key"] = to_text(rec.key);
  j["rep"] = to_text(rec.rep);
  j["trace"] = to_text(rec.trace);
  j["case"] = case_name(*rec.case_tag);
  j["census"] = census_to_json(*rec.census, true);
  emit(j, opt.format, out);
  return !rec.census->stabilized && opt.strict ? kInconclusive : kOk;
}

int run_survey(const Options& opt, std::ostream& out) {
  RingContext ctx(opt.p, pseudo_euclid_cap());
  SurveyOptions sopts;
  sopts.max_len = opt.max_len;
  sopts.depth = opt.depth;
  sopts.exec = opt.serial ? Execution::Serial : Execution::Parallel;
  const Survey survey = run_survey(ctx, sopts);

  if (opt.format == "csv")
    out << survey_to_csv(survey);
  else
    out << survey_to_json(ctx.p(), sopts, survey).dump() << "\n";

  if (opt.strict) {
    bool unstable = survey.fibers.inconclusive > 0;
    for (const ClassRecord& rec : survey.records)
      if (rec.census.has_value() && !rec.census->stabilized) unstable = true;
    if (unstable || survey.fibers.mismatches > 0) return kInconclusive;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact reciprocity toolkit for the Hecke groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    cmd->add_option("--p", opt.p, "group index p (>= 3)")->required()->check(CLI::Range(3, 1000));
    cmd->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--strict", opt.strict, "inconclusive outcomes exit nonzero");
    if (with_input) cmd->add_option("input", opt.input, "element")->required();
  };

  CLI::App* ring = app.add_subcommand("ring", "ring context info and exact arithmetic");
  add_common(ring, false);
  // allow_extra_args(false) keeps CLI11 from expanding the [c0,c1,...] grammar
  // as a bracketed list literal
  ring->add_option("--gcd", opt.gcd_args, "pseudo-Euclidean gcd of two elements")
      ->expected(2)
      ->allow_extra_args(false);
  ring->add_option("--add", opt.add_args)->expected(2)->allow_extra_args(false);
  ring->add_option("--sub", opt.sub_args)->expected(2)->allow_extra_args(false);
  ring->add_option("--mul", opt.mul_args)->expected(2)->allow_extra_args(false);
  ring->add_option("--divide", opt.divide_args, "pseudo-division a = b(n lambda)+r")
      ->expected(2)
      ->allow_extra_args(false);
  ring->add_option("--sign", opt.sign_arg, "sign under the real embedding");
  ring->add_option("--halve", opt.halve_arg);

  CLI::App* member = app.add_subcommand("member", "group membership test");
  add_common(member, true);
  CLI::App* cls = app.add_subcommand("classify", "elliptic/parabolic/hyperbolic");
  add_common(cls, true);
  CLI::App* word = app.add_subcommand("word", "evaluate a word to a matrix");
  add_common(word, true);
  CLI::App* matrix = app.add_subcommand("matrix", "decompose a matrix into a word");
  add_common(matrix, true);
  CLI::App* reciprocal = app.add_subcommand("reciprocal", "reciprocity verdict");
  add_common(reciprocal, true);
  reciprocal->add_option("--depth", opt.depth, "conjugate search depth")
      ->check(CLI::Range(1, 64));
  CLI::App* cen = app.add_subcommand("census", "class census of an element");
  add_common(cen, true);
  cen->add_option("--depth", opt.depth)->check(CLI::Range(1, 64));
  CLI::App* survey = app.add_subcommand("survey", "bounded survey of all classes");
  survey->add_option("--p", opt.p)->required()->check(CLI::Range(3, 1000));
  survey->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}));
  survey->add_flag("--strict", opt.strict);
  survey->add_option("--depth", opt.depth)->check(CLI::Range(1, 64));
  survey->add_option("--max-len", opt.max_len)->check(CLI::Range(2, 32));
  survey->add_flag("--serial", opt.serial, "disable parallel class processing");

  std::vector<const char*> argv{"hecke"};
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kParse;
    }

    if (app.got_subcommand(ring)) return run_ring(opt, out);
    if (app.got_subcommand(member)) return run_member(opt, out);
    if (app.got_subcommand(cls)) return run_classify(opt, out);
    if (app.got_subcommand(word)) return run_word(opt, out);
    if (app.got_subcommand(matrix)) return run_matrix(opt, out);
    if (app.got_subcommand(reciprocal)) return run_reciprocal(opt, out);
    if (app.got_subcommand(cen)) return run_census(opt, out);
    if (app.got_subcommand(survey)) return run_survey(opt, out);
    err << "error: no subcommand\n";
    return kParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UndeterminedError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const SearchExhaustedError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const NotAMemberError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvalidTupleError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotAnInvolutionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace hecke::cli
