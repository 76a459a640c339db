// Copyright 2026 The Taxonomy Induction Authors.
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

#include "taxo/error.h"

namespace taxo {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownNodeInEdge: return "UnknownNodeInEdge";
    case ErrorCode::kForbiddenEdgeKind: return "ForbiddenEdgeKind";
    case ErrorCode::kDuplicateNodeId: return "DuplicateNodeId";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNonBijectiveLink: return "NonBijectiveLink";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kProjectedEdgeNotInGraph: return "ProjectedEdgeNotInGraph";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::kSingleClassDataset: return "SingleClassDataset";
    case ErrorCode::kEmptyValidation: return "EmptyValidation";
    case ErrorCode::kEmptyProjectedTaxonomy: return "EmptyProjectedTaxonomy";
    case ErrorCode::kEmptyGold: return "EmptyGold";
    case ErrorCode::kEmptyPathSet: return "EmptyPathSet";
    case ErrorCode::kEmptyTaxonomy: return "EmptyTaxonomy";
    case ErrorCode::kInsufficientNodes: return "InsufficientNodes";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace taxo
