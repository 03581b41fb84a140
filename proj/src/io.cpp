#include "hecke/io.hpp"

#include <sstream>

namespace hecke {

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  char peek() {
    skip_ws();
    if (i >= s.size()) throw ParseError("unexpected end of input");
    return s[i];
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(i));
    ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) throw ParseError("expected an integer at position " +
                                      std::to_string(start));
    return Int(std::string(s.substr(start, i - start)));
  }
};

std::vector<Int> parse_coeff_list(Cursor& cur) {
  std::vector<Int> coeffs;
  cur.expect('[');
  if (cur.peek() != ']') {
    coeffs.push_back(cur.integer());
    while (cur.peek() == ',') {
      cur.expect(',');
      coeffs.push_back(cur.integer());
    }
  }
  cur.expect(']');
  return coeffs;
}

Json fiber_to_json(const FiberCheck& fc) {
  Json j;
  j["size"] = fc.fiber_size;
  if (fc.predicted.has_value())
    j["predicted"] = *fc.predicted;
  else
    j["predicted"] = nullptr;
  j["match"] = fc.match;
  j["inconclusive"] = fc.inconclusive;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string to_text(const RingElem& x) {
  std::string out = "[";
  const auto& cs = x.coeffs();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ",";
    out += cs[i].str();
  }
  out += "]";
  return out;
}

std::string to_text(const GroupElement& g) {
  return "[[" + to_text(g.m11()) + "," + to_text(g.m12()) + "],[" + to_text(g.m21()) +
         "," + to_text(g.m22()) + "]]";
}

std::string to_text(const Word& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += " ";
    if (l.is_iota())
      out += "i";
    else
      out += "g^" + std::to_string(l.exponent());
  }
  return out;
}

std::string to_text(const CyclicWord& w) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += " ";
    if (l.is_iota())
      out += "i";
    else
      out += "g^" + std::to_string(l.exponent());
  }
  return out;
}

RingElem parse_ring_elem(const RingContext& ctx, std::string_view s) {
  Cursor cur{s};
  std::vector<Int> coeffs = parse_coeff_list(cur);
  if (!cur.done()) throw ParseError("trailing input after ring element");
  if (coeffs.size() > static_cast<std::size_t>(ctx.degree()))
    throw ParseError("ring element has more coefficients than the field degree");
  return RingElem(ctx, std::move(coeffs));
}

GroupElement parse_matrix(const RingContext& ctx, std::string_view s) {
  Cursor cur{s};
  cur.expect('[');
  RingElem entries[4] = {RingElem::zero(ctx), RingElem::zero(ctx), RingElem::zero(ctx),
                         RingElem::zero(ctx)};
  for (int row = 0; row < 2; ++row) {
    cur.expect('[');
    for (int col = 0; col < 2; ++col) {
      std::vector<Int> coeffs = parse_coeff_list(cur);
      if (coeffs.size() > static_cast<std::size_t>(ctx.degree()))
        throw ParseError("matrix entry has more coefficients than the field degree");
      entries[2 * row + col] = RingElem(ctx, std::move(coeffs));
      if (col == 0) cur.expect(',');
    }
    cur.expect(']');
    if (row == 0) cur.expect(',');
  }
  cur.expect(']');
  if (!cur.done()) throw ParseError("trailing input after matrix");
  try {
    return GroupElement(entries[0], entries[1], entries[2], entries[3]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Word parse_word(std::string_view s, int p) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (tok == "i") {
      letters.push_back(Letter::iota());
    } else if (tok.rfind("g^", 0) == 0) {
      int k;
      try {
        std::size_t used = 0;
        k = std::stoi(tok.substr(2), &used);
        if (used != tok.size() - 2) throw std::invalid_argument(tok);
      } catch (...) {
        throw ParseError("bad word token: " + tok);
      }
      if (k < 1 || k >= p) throw ParseError("gamma exponent out of range: " + tok);
      letters.push_back(Letter::gamma(k));
    } else {
      throw ParseError("bad word token: " + tok);
    }
  }
  return Word::from_letters(std::move(letters), p);
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not_member";
    case Membership::Undetermined: return "undetermined";
  }
  return "?";
}

const char* element_kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Elliptic: return "elliptic";
    case ElementKind::Parabolic: return "parabolic";
    case ElementKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

const char* kind_name(ReciprocalKind k) {
  switch (k) {
    case ReciprocalKind::Involution: return "involution";
    case ReciprocalKind::HyperbolicReciprocal: return "hyperbolic_reciprocal";
    case ReciprocalKind::NotReciprocal: return "not_reciprocal";
  }
  return "?";
}

const char* type_name(ReciprocatorType t) {
  switch (t) {
    case ReciprocatorType::IotaClass: return "iota_class";
    case ReciprocatorType::GammaClass: return "gamma_class";
  }
  return "?";
}

const char* theta_name(CanonicalTheta t) {
  switch (t) {
    case CanonicalTheta::Zero: return "zero";
    case CanonicalTheta::One: return "one";
    case CanonicalTheta::CosPiOverP: return "cos_pi_over_p";
  }
  return "?";
}

const char* case_name(CaseTag c) {
  switch (c) {
    case CaseTag::OddDefault: return "odd_default";
    case CaseTag::EvenIotaOnly: return "even_iota_only";
    case CaseTag::EvenGammaOnly: return "even_gamma_only";
    case CaseTag::EvenBothNoIotaGammaPower: return "even_both_no_iota_gamma_power";
    case CaseTag::EvenBothWithIotaGammaPower: return "even_both_with_iota_gamma_power";
  }
  return "?";
}

Json to_json(const FixedPointRatio& r) {
  Json j;
  switch (r.kind()) {
    case FixedPointRatio::Kind::Finite:
      j["kind"] = "finite";
      j["num"] = to_text(r.num());
      j["den"] = to_text(r.den());
      break;
    case FixedPointRatio::Kind::Infinity:
      j["kind"] = "infinity";
      break;
    case FixedPointRatio::Kind::DegenerateOne:
      j["kind"] = "degenerate_one";
      break;
  }
  if (r.kind() == FixedPointRatio::Kind::Finite) {
    j["is_zero"] = r.is_zero_value();
    j["is_one"] = r.is_one_value();
    j["is_cos_pi_over_p"] = r.is_cos_pi_over_p();
  }
  return j;
}

Json to_json(const ReciprocityVerdict& v) {
  Json j;
  j["reciprocal"] = v.reciprocal;
  j["kind"] = kind_name(v.kind);
  j["reciprocator_word"] =
      v.reciprocator.has_value() ? Json(to_text(v.reciprocator->word)) : Json(nullptr);
  j["reciprocator_matrix"] =
      v.reciprocator.has_value() ? Json(to_text(v.reciprocator->matrix)) : Json(nullptr);
  j["reciprocator_type"] =
      v.reciprocator_type.has_value() ? Json(type_name(*v.reciprocator_type)) : Json(nullptr);
  j["canonical_theta"] = v.theta.has_value() ? Json(theta_name(v.theta->value)) : Json(nullptr);
  j["witness_word"] = v.theta.has_value() ? Json(to_text(v.theta->witness)) : Json(nullptr);
  return j;
}

Json census_to_json(const CensusResult& c, bool include_elements) {
  Json j;
  j["symmetric"] = c.symmetric.size();
  j["p_reciprocal"] = c.p_reciprocal.size();
  j["symmetric_p_reciprocal"] = c.symmetric_p_reciprocal.size();
  j["symmetric_pairs"] = CensusResult::paired_count(c.symmetric);
  j["p_reciprocal_pairs"] = CensusResult::paired_count(c.p_reciprocal);
  j["symmetric_p_reciprocal_pairs"] = CensusResult::paired_count(c.symmetric_p_reciprocal);
  j["depth"] = c.depth_used;
  j["stabilized"] = c.stabilized;
  if (include_elements) {
    auto dump = [](const std::set<GroupElement>& s) {
      Json arr = Json::array();
      for (const GroupElement& m : s) arr.push_back(to_text(m));
      return arr;
    };
    j["symmetric_elements"] = dump(c.symmetric);
    j["p_reciprocal_elements"] = dump(c.p_reciprocal);
    j["symmetric_p_reciprocal_elements"] = dump(c.symmetric_p_reciprocal);
  }
  return j;
}

Json survey_to_json(int p, const SurveyOptions& opts, const Survey& s) {
  Json j;
  j["p"] = p;
  j["max_len"] = opts.max_len;
  j["depth"] = opts.depth;
  Json classes = Json::array();
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    const ClassRecord& rec = s.records[i];
    Json c;
    c["key"] = to_text(rec.key);
    c["rep"] = to_text(rec.rep);
    c["trace"] = to_text(rec.trace);
    c["primitive"] = rec.primitive;
    c["reciprocal"] = rec.reciprocal;
    c["case"] = rec.case_tag.has_value() ? Json(case_name(*rec.case_tag)) : Json(nullptr);
    c["census"] = rec.census.has_value() ? census_to_json(*rec.census, false) : Json(nullptr);
    Json tuples = Json::array();
    for (const ClassTuple& tu : rec.tuples)
      tuples.push_back(Json::array({to_text(tu.a), to_text(tu.b), to_text(tu.c), to_text(tu.t)}));
    c["tuples"] = std::move(tuples);
    c["fiber"] = s.fibers.per_class[i].has_value() ? fiber_to_json(*s.fibers.per_class[i])
                                                   : Json(nullptr);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  Json summary;
  summary["matches"] = s.fibers.matches;
  summary["mismatches"] = s.fibers.mismatches;
  summary["inconclusive"] = s.fibers.inconclusive;
  j["fiber_summary"] = std::move(summary);
  return j;
}

std::string survey_to_csv(const Survey& s) {
  std::string out =
      "key,trace,case,symmetric,p_reciprocal,sym_p_reciprocal,fiber_size,"
      "predicted_fiber,stabilized\n";
  for (std::size_t i = 0; i < s.records.size(); ++i) {
    const ClassRecord& rec = s.records[i];
    out += csv_quote(to_text(rec.key)) + ",";
    out += csv_quote(to_text(rec.trace)) + ",";
    out += rec.case_tag.has_value() ? case_name(*rec.case_tag) : "";
    out += ",";
    if (rec.census.has_value()) {
      out += std::to_string(rec.census->symmetric.size()) + ",";
      out += std::to_string(rec.census->p_reciprocal.size()) + ",";
      out += std::to_string(rec.census->symmetric_p_reciprocal.size()) + ",";
    } else {
      out += ",,,";
    }
    const auto& fc = s.fibers.per_class[i];
    if (fc.has_value()) {
      out += std::to_string(fc->fiber_size) + ",";
      out += fc->predicted.has_value() ? std::to_string(*fc->predicted) : "";
      out += ",";
    } else {
      out += ",,";
    }
    out += rec.census.has_value() ? (rec.census->stabilized ? "true" : "false") : "";
    out += "\n";
  }
  return out;
}

}  // namespace hecke
