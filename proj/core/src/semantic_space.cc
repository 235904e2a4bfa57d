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

#include "slukit/semantic_space.h"

#include "slukit/corpus.h"
#include "slukit/error.h"

namespace slukit {

void SemanticSpace::AddIntent(const std::string& name) {
  if (name.empty()) throw ValidationError("empty intent name");
  intents_.insert(name);
}

void SemanticSpace::AddConcept(const std::string& name,
                               const std::string& parent) {
  if (name.empty()) throw ValidationError("empty concept name");
  if (!parent.empty() && !parent_.count(parent))
    throw ValidationError("concept '" + name + "' references unknown parent '" +
                          parent + "'");
  // Walking up from the parent must never reach `name`.
  for (std::string p = parent; !p.empty(); p = parent_.at(p)) {
    if (p == name)
      throw ValidationError("concept '" + name + "' would create a cycle");
  }
  auto [it, inserted] = parent_.emplace(name, parent);
  if (!inserted && it->second != parent)
    throw ValidationError("concept '" + name + "' redefined with a different parent");
}

bool SemanticSpace::HasIntent(const std::string& name) const {
  return intents_.count(name) > 0;
}

bool SemanticSpace::HasConcept(const std::string& name) const {
  return parent_.count(name) > 0;
}

const std::string& SemanticSpace::ParentOf(
    const std::string& concept_name) const {
  auto it = parent_.find(concept_name);
  if (it == parent_.end())
    throw ValidationError("unknown concept '" + concept_name + "'");
  return it->second;
}

const SemanticSpace& DefaultSemanticSpace() {
  static const SemanticSpace* space = [] {
    auto* s = new SemanticSpace();
    s->AddIntent("check_device");
    s->AddIntent("contact");
    s->AddIntent("get_room_property");
    s->AddIntent("get_world_property");
    s->AddIntent("set_device");
    s->AddIntent("set_device_property");
    s->AddIntent("set_room_property");
    s->AddIntent(kNoneIntent);

    s->AddConcept("action");
    s->AddConcept("device");
    s->AddConcept("device-component", "device");
    s->AddConcept("device-setting", "device");
    s->AddConcept("device-state", "device");
    s->AddConcept("location");
    s->AddConcept("location-room", "location");
    s->AddConcept("location-floor", "location");
    s->AddConcept("person");
    s->AddConcept("person-name", "person");
    s->AddConcept("organization");
    s->AddConcept("property");
    s->AddConcept("room-property", "property");
    s->AddConcept("world-property", "property");
    s->AddConcept("time");
    s->AddConcept("amount");
    return s;
  }();
  return *space;
}

}  // namespace slukit
