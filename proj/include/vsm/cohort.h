// include/vsm/cohort.h

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

#ifndef VSM_COHORT_H_
#define VSM_COHORT_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace vsm {

enum class Domain { kOriginal, kProtected };

// "O" or "P".
std::string_view DomainName(Domain domain);
std::optional<Domain> ParseDomain(std::string_view name);

struct SegmentId {
  std::string value;
  auto operator<=>(const SegmentId &) const = default;
};

struct SpeakerId {
  std::string value;
  auto operator<=>(const SpeakerId &) const = default;
};

struct ManifestEntry {
  SegmentId segment;
  SpeakerId speaker;
  Domain domain;
};

/**
   CohortManifest maps every segment of both domains to its speaker and fixes
   the speaker order used for the rows and columns of every similarity matrix
   built from it.  The order is the order of first appearance in the entry
   list, not a lexical sort.

   Segment ids only need to be unique within a domain: a protected segment
   may reuse the id of the original it was derived from.  When both domains
   are populated they must cover the same set of speakers.

   Immutable once built.
*/
class CohortManifest {
 public:
  // Throws EmptyInput, DuplicateSegment, MalformedLine (bad token) or
  // SpeakerSetMismatch.
  static CohortManifest Build(std::vector<ManifestEntry> entries);

  const std::vector<ManifestEntry> &entries() const { return entries_; }
  const std::vector<SpeakerId> &speaker_order() const { return speakers_; }
  std::size_t num_speakers() const { return speakers_.size(); }
  bool HasDomain(Domain domain) const;

  std::optional<std::size_t> SpeakerIndex(const SpeakerId &speaker) const;

  // Index into entries() of the segment in the given domain.
  std::optional<std::size_t> EntryIndex(std::string_view segment,
                                        Domain domain) const;

  // Segments of `speaker` in `domain`, in insertion order.  Throws
  // UnknownSpeaker.
  const std::vector<SegmentId> &SegmentsOf(const SpeakerId &speaker,
                                           Domain domain) const;
  const std::vector<SegmentId> &SegmentsOf(std::size_t speaker_index,
                                           Domain domain) const;

  // Speaker index of entries()[entry_index].
  std::size_t SpeakerOfEntry(std::size_t entry_index) const {
    return entry_speaker_[entry_index];
  }

 private:
  CohortManifest() = default;

  std::vector<ManifestEntry> entries_;
  std::vector<SpeakerId> speakers_;
  std::vector<std::size_t> entry_speaker_;
  std::unordered_map<std::string, std::size_t> speaker_index_;
  std::unordered_map<std::string, std::size_t> entry_index_[2];
  std::vector<std::vector<SegmentId>> segment_lists_[2];
};

inline CohortManifest BuildManifest(std::vector<ManifestEntry> entries) {
  return CohortManifest::Build(std::move(entries));
}

// Serialised manifest: one `<segment> <speaker> <O|P>` line per entry.
std::string WriteManifest(const CohortManifest &manifest);
CohortManifest ParseManifest(std::string_view text);

// utt2spk files: `<segment> <speaker>` per line, all in one domain.
std::vector<ManifestEntry> ParseUtt2Spk(std::string_view text, Domain domain);
std::string WriteUtt2Spk(const CohortManifest &manifest, Domain domain);

}  // namespace vsm

#endif  // VSM_COHORT_H_
