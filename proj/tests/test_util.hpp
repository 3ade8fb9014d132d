#pragma once

// Shared helpers for tests that drive the CLI binary: subprocess capture and
// a minimal RFC-4180 reader (quoted cells, doubled quotes, '#' echo lines
// skipped).

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

struct RunResult {
    int exit_code = -1;   // -1 means abnormal termination (signal)
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline RunResult run_command(const std::string& command) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const auto out_path = dir / ("pqbern_out_" + tag);
    const auto err_path = dir / ("pqbern_err_" + tag);

    const std::string full = command + " >" + out_path.string() + " 2>" + err_path.string();
    const int status = std::system(full.c_str());

    RunResult result;
    if (status != -1 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return result;
}

inline std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            ++i;
            continue;
        }
        std::vector<std::string> row;
        std::string cell;
        bool quoted = false;
        for (; i < text.size(); ++i) {
            const char c = text[i];
            if (quoted) {
                if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cell += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                row.push_back(std::move(cell));
                cell.clear();
            } else if (c == '\n') {
                ++i;
                break;
            } else {
                cell += c;
            }
        }
        row.push_back(std::move(cell));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace testutil
