#pragma once

#include <string>
#include <vector>

namespace triage {

// Canonical string form used for all dictionary keys and cross-paper matching:
// ASCII lowercase, punctuation stripped except intra-word hyphens, whitespace
// runs collapsed to single spaces, trimmed. Idempotent.
std::string normalize_text(const std::string& raw);

// Splits an already-normalized string on single spaces.
std::vector<std::string> split_tokens(const std::string& normalized);

}  // namespace triage
