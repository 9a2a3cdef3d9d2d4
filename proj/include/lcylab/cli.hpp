#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification came out
// false, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "lcylab/cycles.hpp"
#include "lcylab/lcverify.hpp"

namespace lcylab::cli {

enum class Format { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

std::string render_report(const cycles::LemmaReport& report, Format format);
std::string render_report(const lcverify::VerificationReport& report, Format format);

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcylab::cli
