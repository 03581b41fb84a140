// Textual grammars shared by the CLI: ring elements as little-endian integer
// coefficient lists, matrices as nested lists, words as `i g^k` token
// streams; JSON and CSV report builders.
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hecke/classes.hpp"

namespace hecke {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

std::string to_text(const RingElem& x);      // [c0,c1,...]
std::string to_text(const GroupElement& g);  // [[e,e],[e,e]]
std::string to_text(const Word& w);          // i g^2 i ... (empty word: "")
std::string to_text(const CyclicWord& w);

RingElem parse_ring_elem(const RingContext& ctx, std::string_view s);
GroupElement parse_matrix(const RingContext& ctx, std::string_view s);
Word parse_word(std::string_view s, int p);

const char* membership_name(Membership m);
const char* element_kind_name(ElementKind k);
const char* kind_name(ReciprocalKind k);
const char* type_name(ReciprocatorType t);
const char* theta_name(CanonicalTheta t);
const char* case_name(CaseTag c);

Json to_json(const FixedPointRatio& r);
Json to_json(const ReciprocityVerdict& v);
Json census_to_json(const CensusResult& c, bool include_elements);
Json survey_to_json(int p, const SurveyOptions& opts, const Survey& s);
std::string survey_to_csv(const Survey& s);

}  // namespace hecke
