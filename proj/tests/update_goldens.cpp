// Rewrites tests/golden/*.golden from the current CLI. Review the diff before
// committing.
#include "golden_cases.hpp"

#include <iostream>

int main() {
  const auto scratch = std::filesystem::temp_directory_path() / "barth-golden-update";
  std::filesystem::create_directories(scratch);
  std::filesystem::create_directories(BARTH_GOLDEN_DIR);
  for (const auto& c : golden::cases()) {
    const auto result = golden::run(c, scratch);
    if (result.exit_code != c.exit_code)
      std::cerr << c.name << ": exit " << result.exit_code << ", expected " << c.exit_code << '\n';
    std::ofstream(golden::golden_path(c), std::ios::binary) << result.output;
  }
  std::filesystem::remove_all(scratch);
}
