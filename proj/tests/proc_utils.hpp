// Test-only helpers to run the CLI binary and capture output.
#pragma once

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace proc {

struct Result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

inline Result run(const std::string& command) {
    static int counter = 0;
    std::string out_path = "cli_test_out_" + std::to_string(counter) + ".tmp";
    std::string err_path = "cli_test_err_" + std::to_string(counter) + ".tmp";
    ++counter;
    std::string full = command + " > " + out_path + " 2> " + err_path;
    int status = std::system(full.c_str());
    Result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

inline std::string cli_path() {
    const char* env = std::getenv("RANKFILT_CLI");
    return env ? env : "./rankfilt";
}

}  // namespace proc
