// Copyright 2026 The slukit Authors
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

#ifndef SLUKIT_SEMANTIC_SPACE_H_
#define SLUKIT_SEMANTIC_SPACE_H_

#include <map>
#include <set>
#include <string>

namespace slukit {

// The label inventory a corpus is annotated with: a flat intent set and a
// concept tree (child -> parent edges; roots have an empty parent).
class SemanticSpace {
 public:
  SemanticSpace() = default;

  void AddIntent(const std::string& name);
  // Adds a concept under `parent` ("" for a root). Throws ValidationError on
  // an unknown parent or if the edge would close a cycle.
  void AddConcept(const std::string& name, const std::string& parent = "");

  bool HasIntent(const std::string& name) const;
  bool HasConcept(const std::string& name) const;
  const std::string& ParentOf(const std::string& concept_name) const;

  const std::set<std::string>& intents() const { return intents_; }
  const std::map<std::string, std::string>& concepts() const {
    return parent_;
  }

 private:
  std::set<std::string> intents_;
  std::map<std::string, std::string> parent_;  // concept -> parent ("" = root)
};

// The smart-home command inventory the shipped grammars and symbol tables
// use: seven command intents plus `none`, and a device/location/property
// concept tree.
const SemanticSpace& DefaultSemanticSpace();

}  // namespace slukit

#endif  // SLUKIT_SEMANTIC_SPACE_H_
