// Copyright 2026 The owltext Authors
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

#ifndef OWLTEXT_SCAFFOLD_HPP_
#define OWLTEXT_SCAFFOLD_HPP_

#include <string>

#include "owltext/resources.hpp"

namespace owltext {

// Builds a skeleton resource set from an ontology: one stub name per entity
// and one stub plan per property, both seeded from labels or tokenized
// identifiers. Stub ids carry an auto_ prefix so authors can spot them.
ResourceSet scaffold_resources(const OntologyModel& model,
                               const std::string& language);

}  // namespace owltext

#endif  // OWLTEXT_SCAFFOLD_HPP_
