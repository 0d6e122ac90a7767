#pragma once

#include "qcycle/wedge.hpp"

#include <string>
#include <vector>

namespace qc {

enum class Family { XMinus, XMinus2, XPlus, XPlus2, APlus, AMinus };
std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Truncated generating series of one generator family applied to P.
// stored coefficient = prefactor * (coefficient of the abstract generator series).
struct TruncSeries {
  Family family;
  Point point;
  int order = 0;
  int n = 0, l = 0;
  std::map<int, WedgeElem> coeffs;
  CycScalar prefactor{1};
  // range of t-powers this family can carry at this point
  int k_min() const;
  int k_max() const;
  WedgeElem abstract_coeff(int k) const;
};

// prefactor relating stored kernel data to the abstract series
CycScalar family_prefactor(Family f, Point at, int n);
int target_l(Family f, int l);

// Expansion of the action of a generator family on P.  When only_k is given, only that
// coefficient is materialized.
TruncSeries act_series(Family f, const WedgeElem& p, Point at, int order, std::optional<int> only_k = {});

enum class ModeKind { XPlus, XMinus, XPlus2, XMinus2, XPlus2Series, XMinus2Series, ATilde, T1 };

struct GenMode {
  ModeKind kind;
  int k = 0;  // mode index; for T1 the exponent +1 or -1
  std::string str() const;
  static GenMode parse(const std::string& s);
  // weight change and degree shift of the generator
  int weight_shift() const;
  int degree_shift() const;
};
using Word = std::vector<GenMode>;  // applied right to left
Word parse_word(const std::string& s);
std::string word_str(const Word& w);

WedgeElem mode_extract(const TruncSeries& s, int k);
WedgeElem apply_mode(const GenMode& g, const WedgeElem& p);
WedgeElem apply_word(const Word& w, const WedgeElem& p);

struct SpotReport {
  std::string relation;
  int samples = 0;
  int passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return samples == passed; }
};
// relations: "t1-conjugation", "a-commutativity", "a-x-bracket", "ex-bracket-diagonal"
SpotReport relation_spotcheck(const std::string& relation, const std::vector<WedgeElem>& samples);

}  // namespace qc
