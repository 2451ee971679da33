// Stand-in CAS adapter for tests.
//   fake_cas table <fixtures.json>   answer from the fixture rows
//   fake_cas garbage                 reply with non-JSON
//   fake_cas shape                   reply with JSON of the wrong shape
//   fake_cas sleep <seconds>         never answer in time
//   fake_cas fail                    exit with status 3
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

int main(int argc, char** argv) {
  const std::string mode = argc > 1 ? argv[1] : "";
  std::string line;
  std::getline(std::cin, line);
  if (mode == "garbage") {
    std::cout << "h_k5 is 25, probably\n";
    return 0;
  }
  if (mode == "shape") {
    std::cout << R"({"h_k5": 25, "type": [5], "rank_ambiguous": 2})" << "\n";
    return 0;
  }
  if (mode == "sleep") {
    std::this_thread::sleep_for(std::chrono::seconds(argc > 2 ? std::atoi(argv[2]) : 30));
    return 0;
  }
  if (mode == "fail") return 3;
  if (mode == "table" && argc > 2) {
    const auto n = nlohmann::json::parse(line).at("n").get<std::uint64_t>();
    std::ifstream in(argv[2]);
    for (const auto& row : nlohmann::json::parse(in)) {
      if (row.at("n").get<std::uint64_t>() == n) {
        std::cout << nlohmann::json{{"h_k5", row.at("h_k5")}, {"type", row.at("type")},
                                    {"rank_ambiguous", row.at("rank_ambiguous")}}
                         .dump()
                  << "\n";
        return 0;
      }
    }
    return 4;
  }
  return 2;
}
