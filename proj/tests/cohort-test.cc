// tests/cohort-test.cc

// Copyright 2026  The vsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "test-util.h"
#include "vsm/cohort.h"
#include "vsm/error.h"

namespace vsm {

using namespace vsm::testing;

namespace {

ManifestEntry E(const char *seg, const char *spk, Domain d) {
  return {SegmentId{seg}, SpeakerId{spk}, d};
}

constexpr Domain O = Domain::kOriginal;
constexpr Domain P = Domain::kProtected;

ErrorCode CodeOf(const auto &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("single speaker manifest") {
  auto m = BuildManifest({E("u1", "A", O), E("u2", "A", O), E("u1p", "A", P)});
  REQUIRE(m.num_speakers() == 1);
  CHECK(m.speaker_order()[0].value == "A");
  CHECK(m.SegmentsOf(SpeakerId{"A"}, O) ==
        std::vector<SegmentId>{{"u1"}, {"u2"}});
  CHECK(m.SegmentsOf(SpeakerId{"A"}, P) == std::vector<SegmentId>{{"u1p"}});
  CHECK(CodeOf([&] { m.SegmentsOf(SpeakerId{"B"}, O); }) ==
        ErrorCode::kUnknownSpeaker);
}

TEST_CASE("build errors") {
  CHECK(CodeOf([] { BuildManifest({E("u1", "A", O), E("u1", "A", O)}); }) ==
        ErrorCode::kDuplicateSegment);
  CHECK(CodeOf([] { BuildManifest({}); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([] {
          BuildManifest({E("u1", "A", O), E("u2", "B", O), E("u1p", "A", P)});
        }) == ErrorCode::kSpeakerSetMismatch);
  CHECK(CodeOf([] { BuildManifest({E("u 1", "A", O)}); }) ==
        ErrorCode::kMalformedLine);
  // The same id may appear once per domain.
  auto m = BuildManifest({E("u1", "A", O), E("u1", "A", P)});
  CHECK(m.EntryIndex("u1", O) == 0u);
  CHECK(m.EntryIndex("u1", P) == 1u);
}

TEST_CASE("3 speakers x 2 segments x 2 domains") {
  std::vector<ManifestEntry> entries;
  std::vector<std::string> names;
  for (const char *d : {"o", "p"})
    for (const char *s : {"A", "B", "C"})
      for (int k = 0; k < 2; ++k)
        names.push_back(std::string(s) + d + std::to_string(k));
  std::size_t idx = 0;
  for (Domain d : {O, P})
    for (const char *s : {"A", "B", "C"})
      for (int k = 0; k < 2; ++k) {
        entries.push_back({SegmentId{names[idx++]}, SpeakerId{s}, d});
      }
  auto m = BuildManifest(entries);
  CHECK(m.num_speakers() == 3);
  CHECK(m.entries().size() == 12);
  CHECK(m.HasDomain(O));
  CHECK(m.HasDomain(P));
  for (std::size_t e = 0; e < entries.size(); ++e) {
    CHECK(m.speaker_order()[m.SpeakerOfEntry(e)] == entries[e].speaker);
  }
  CHECK(m.SegmentsOf(SpeakerId{"B"}, P) ==
        std::vector<SegmentId>{{"Bp0"}, {"Bp1"}});
}

TEST_CASE("single-domain manifest is allowed") {
  auto m = BuildManifest({E("a", "X", O), E("b", "Y", O)});
  CHECK_FALSE(m.HasDomain(P));
  CHECK(m.SegmentsOf(1, P).empty());
}

TEST_CASE("manifest parse errors carry the line") {
  try {
    ParseManifest("a X O\n\nb Y Q\n");
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMalformedLine);
    CHECK(e.line() == 3);
  }
  try {
    ParseUtt2Spk("a X\na Y\n", O);
    FAIL("expected error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kDuplicateSegment);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("property: serialise then parse is the identity") {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + gen() % 6;
    int segs = 1 + gen() % 4;
    bool both = gen() % 2;
    std::vector<ManifestEntry> entries = MakeCohortEntries(n, segs, both);
    std::shuffle(entries.begin(), entries.end(), gen);
    auto m = BuildManifest(entries);
    auto back = ParseManifest(WriteManifest(m));
    REQUIRE(back.entries().size() == m.entries().size());
    for (std::size_t e = 0; e < entries.size(); ++e) {
      CHECK(back.entries()[e].segment == m.entries()[e].segment);
      CHECK(back.entries()[e].speaker == m.entries()[e].speaker);
      CHECK(back.entries()[e].domain == m.entries()[e].domain);
    }
    CHECK(back.speaker_order() == m.speaker_order());
    CHECK(WriteManifest(back) == WriteManifest(m));
    for (Domain d : {O, P}) {
      if (!m.HasDomain(d)) continue;
      auto u = ParseUtt2Spk(WriteUtt2Spk(m, d), d);
      std::size_t count = 0;
      for (const auto &e : m.entries()) count += e.domain == d;
      CHECK(u.size() == count);
    }
  }
}

TEST_CASE("property: speaker order depends only on first appearance") {
  std::mt19937_64 gen(4);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + gen() % 6;
    int segs = 1 + gen() % 4;
    auto entries = MakeCohortEntries(n, segs, gen() % 2);
    std::shuffle(entries.begin(), entries.end(), gen);
    auto m = BuildManifest(entries);
    // Keep every speaker's first entry in place, shuffle the rest among
    // positions after it.
    std::map<std::string, std::size_t> first;
    for (std::size_t e = 0; e < entries.size(); ++e)
      first.emplace(entries[e].speaker.value, e);
    std::vector<ManifestEntry> heads, tails;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      (first[entries[e].speaker.value] == e ? heads : tails)
          .push_back(entries[e]);
    }
    std::shuffle(tails.begin(), tails.end(), gen);
    auto permuted = heads;
    permuted.insert(permuted.end(), tails.begin(), tails.end());
    CHECK(BuildManifest(permuted).speaker_order() == m.speaker_order());
  }
}

}  // namespace vsm
