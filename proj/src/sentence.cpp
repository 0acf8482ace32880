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

#include "owltext/sentence.hpp"

namespace owltext {

int Clause::subject_chunk() const {
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (chunks[i].kind == Chunk::Kind::Subject) return static_cast<int>(i);
  }
  return -1;
}

int Clause::verb_chunk() const {
  for (size_t i = 0; i < chunks.size(); ++i) {
    if (chunks[i].kind == Chunk::Kind::Verb) return static_cast<int>(i);
  }
  return -1;
}

const SubjectRef* Clause::subject() const {
  int i = subject_chunk();
  return i < 0 ? nullptr : &chunks[i].subject;
}

SubjectRef* Clause::subject() {
  int i = subject_chunk();
  return i < 0 ? nullptr : &chunks[i].subject;
}

bool Clause::subject_verb_lead() const {
  return chunks.size() >= 2 && chunks[0].kind == Chunk::Kind::Subject &&
         chunks[1].kind == Chunk::Kind::Verb;
}

Iri SentenceSpec::subject_entity() const {
  const SubjectRef* ref = clauses.front().subject();
  return ref ? ref->entity : Iri{};
}

Iri SentenceSpec::last_subject_entity() const {
  const SubjectRef* ref = clauses.back().subject();
  return ref ? ref->entity : Iri{};
}

int SentenceSpec::message_count() const {
  if (disjunctive) return 1;  // a disjunctive message counts as one
  int total = 0;
  for (const Clause& clause : clauses) total += clause.message_count;
  return total;
}

}  // namespace owltext
