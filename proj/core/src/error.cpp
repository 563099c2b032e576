/*
 * Copyright 2026 The omegagames Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "omegagames/error.hpp"

namespace omega {

std::string_view
errc_name(Errc code)
{
    switch (code) {
    case Errc::NoSuccessor: return "NoSuccessor";
    case Errc::DanglingEdge: return "DanglingEdge";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::BadParams: return "BadParams";
    case Errc::StrategyIncomplete: return "StrategyIncomplete";
    case Errc::OutOfAlphabet: return "OutOfAlphabet";
    case Errc::CertificateViolated: return "CertificateViolated";
    case Errc::AlphabetTooLarge: return "AlphabetTooLarge";
    case Errc::NotAPath: return "NotAPath";
    case Errc::UnsupportedInfinitePath: return "UnsupportedInfinitePath";
    case Errc::Mismatch: return "Mismatch";
    case Errc::RegionNotClosed: return "RegionNotClosed";
    case Errc::TooLargeForMullerCheck: return "TooLargeForMullerCheck";
    case Errc::InputStrategyNotWinning: return "InputStrategyNotWinning";
    case Errc::BadDescriptor: return "BadDescriptor";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownVertexInOverlay: return "UnknownVertexInOverlay";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

} // namespace omega
