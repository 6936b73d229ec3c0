#ifndef OGE_CLI_H_
#define OGE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace oge {

// Entry point of the `oge` tool; `args` excludes the program name. Returns 0
// on success, 1 on data errors (and failed validation), 2 on usage errors.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace oge

#endif  // OGE_CLI_H_
