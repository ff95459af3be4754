// src/cohort.cc

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

#include "vsm/cohort.h"

#include <set>

#include "vsm/error.h"
#include "vsm/text.h"

namespace vsm {

namespace {

int Slot(Domain domain) { return domain == Domain::kOriginal ? 0 : 1; }

}  // namespace

std::string_view DomainName(Domain domain) {
  return domain == Domain::kOriginal ? "O" : "P";
}

std::optional<Domain> ParseDomain(std::string_view name) {
  if (name == "O" || name == "o") return Domain::kOriginal;
  if (name == "P" || name == "p") return Domain::kProtected;
  return std::nullopt;
}

CohortManifest CohortManifest::Build(std::vector<ManifestEntry> entries) {
  if (entries.empty())
    throw Error(ErrorCode::kEmptyInput, "manifest has no entries");

  CohortManifest m;
  m.entries_ = std::move(entries);
  m.entry_speaker_.reserve(m.entries_.size());
  for (std::size_t e = 0; e < m.entries_.size(); ++e) {
    const ManifestEntry &entry = m.entries_[e];
    if (!IsToken(entry.segment.value) || !IsToken(entry.speaker.value))
      throw Error(ErrorCode::kMalformedLine,
                  "segment and speaker ids must be non-empty tokens without "
                  "whitespace (entry " + std::to_string(e + 1) + ")");
    int slot = Slot(entry.domain);
    if (!m.entry_index_[slot].emplace(entry.segment.value, e).second)
      throw Error(ErrorCode::kDuplicateSegment,
                  "segment '" + entry.segment.value + "' appears twice in domain " +
                      std::string(DomainName(entry.domain)));
    auto [it, fresh] =
        m.speaker_index_.emplace(entry.speaker.value, m.speakers_.size());
    if (fresh) {
      m.speakers_.push_back(entry.speaker);
      for (auto &lists : m.segment_lists_) lists.emplace_back();
    }
    m.entry_speaker_.push_back(it->second);
    m.segment_lists_[slot][it->second].push_back(entry.segment);
  }

  if (m.HasDomain(Domain::kOriginal) && m.HasDomain(Domain::kProtected)) {
    for (std::size_t s = 0; s < m.speakers_.size(); ++s) {
      for (Domain d : {Domain::kOriginal, Domain::kProtected}) {
        if (m.segment_lists_[Slot(d)][s].empty())
          throw Error(ErrorCode::kSpeakerSetMismatch,
                      "speaker '" + m.speakers_[s].value +
                          "' has no segments in domain " +
                          std::string(DomainName(d)));
      }
    }
  }
  return m;
}

bool CohortManifest::HasDomain(Domain domain) const {
  return !entry_index_[Slot(domain)].empty();
}

std::optional<std::size_t> CohortManifest::SpeakerIndex(
    const SpeakerId &speaker) const {
  auto it = speaker_index_.find(speaker.value);
  if (it == speaker_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CohortManifest::EntryIndex(std::string_view segment,
                                                      Domain domain) const {
  const auto &index = entry_index_[Slot(domain)];
  auto it = index.find(std::string(segment));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

const std::vector<SegmentId> &CohortManifest::SegmentsOf(
    const SpeakerId &speaker, Domain domain) const {
  auto index = SpeakerIndex(speaker);
  if (!index)
    throw Error(ErrorCode::kUnknownSpeaker,
                "speaker '" + speaker.value + "' is not in the manifest");
  return SegmentsOf(*index, domain);
}

const std::vector<SegmentId> &CohortManifest::SegmentsOf(
    std::size_t speaker_index, Domain domain) const {
  if (speaker_index >= speakers_.size())
    throw Error(ErrorCode::kUnknownSpeaker,
                "speaker index " + std::to_string(speaker_index) +
                    " is out of range");
  return segment_lists_[Slot(domain)][speaker_index];
}

std::string WriteManifest(const CohortManifest &manifest) {
  std::string out;
  for (const ManifestEntry &e : manifest.entries()) {
    out += e.segment.value;
    out += ' ';
    out += e.speaker.value;
    out += ' ';
    out += DomainName(e.domain);
    out += '\n';
  }
  return out;
}

CohortManifest ParseManifest(std::string_view text) {
  std::vector<ManifestEntry> entries;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = SplitFields(line);
    std::optional<Domain> domain;
    if (fields.size() == 3) domain = ParseDomain(fields[2]);
    if (!domain)
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected '<segment> <speaker> <O|P>'",
                  line_no);
    entries.push_back({SegmentId{std::string(fields[0])},
                       SpeakerId{std::string(fields[1])}, *domain});
  });
  return CohortManifest::Build(std::move(entries));
}

std::vector<ManifestEntry> ParseUtt2Spk(std::string_view text, Domain domain) {
  std::vector<ManifestEntry> entries;
  std::set<std::string_view> seen;
  ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    auto fields = SplitFields(line);
    if (fields.size() != 2)
      throw Error(ErrorCode::kMalformedLine,
                  "line " + std::to_string(line_no) +
                      ": expected '<segment> <speaker>'",
                  line_no);
    if (!seen.insert(fields[0]).second)
      throw Error(ErrorCode::kDuplicateSegment,
                  "line " + std::to_string(line_no) + ": segment '" +
                      std::string(fields[0]) + "' listed twice",
                  line_no);
    entries.push_back({SegmentId{std::string(fields[0])},
                       SpeakerId{std::string(fields[1])}, domain});
  });
  return entries;
}

std::string WriteUtt2Spk(const CohortManifest &manifest, Domain domain) {
  std::string out;
  for (const ManifestEntry &e : manifest.entries()) {
    if (e.domain != domain) continue;
    out += e.segment.value;
    out += ' ';
    out += e.speaker.value;
    out += '\n';
  }
  return out;
}

}  // namespace vsm
