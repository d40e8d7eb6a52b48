#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoassoc::cli {

/// Exit codes: 0 success, 1 verification or internal consistency failure,
/// 2 usage error or bad input.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

/// Faces beyond this count need --force for faces/poset.
inline constexpr std::size_t kFaceGuard = 100000;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pseudoassoc::cli
