// Copyright 2026 The actccg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized property checks shared by the property test suite and the
// acceptance runner.

#ifndef ACTCCG_TESTS_SUPPORT_PROPERTIES_HPP_
#define ACTCCG_TESTS_SUPPORT_PROPERTIES_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace actccg::testing {

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

struct PropertyCheck {
  std::string name;
  std::function<PropertyOutcome(int cases, std::uint64_t seed)> run;
};

PropertyOutcome CheckBetaConfluence(int cases, std::uint64_t seed);
PropertyOutcome CheckInverseLambdaRoundTrip(int cases, std::uint64_t seed);
PropertyOutcome CheckChartMatchesBruteForce(int cases, std::uint64_t seed);
PropertyOutcome CheckProbabilityNormalization(int cases, std::uint64_t seed);
PropertyOutcome CheckArgmaxShiftInvariance(int cases, std::uint64_t seed);
PropertyOutcome CheckGradientFiniteDifference(int cases, std::uint64_t seed);
PropertyOutcome CheckForwardChainFixpoint(int cases, std::uint64_t seed);

// Additional invariants beyond the seven headline suites.
PropertyOutcome CheckSubstitutionFreeVars(int cases, std::uint64_t seed);
PropertyOutcome CheckAlphaEquivalenceRelation(int cases, std::uint64_t seed);
PropertyOutcome CheckTermSyntaxRoundTrip(int cases, std::uint64_t seed);
PropertyOutcome CheckCategorySyntaxRoundTrip(int cases, std::uint64_t seed);
PropertyOutcome CheckDerivationInvariants(int cases, std::uint64_t seed);
PropertyOutcome CheckLexiconFileRoundTrip(int cases, std::uint64_t seed);
PropertyOutcome CheckTemplateIdempotence(int cases, std::uint64_t seed);

// The seven headline suites, in order.
std::vector<PropertyCheck> HeadlineProperties();
std::vector<PropertyCheck> AuxiliaryProperties();

}  // namespace actccg::testing

#endif  // ACTCCG_TESTS_SUPPORT_PROPERTIES_HPP_
