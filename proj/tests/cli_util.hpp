#ifndef FSPLIT_CLI_UTIL_HPP
#define FSPLIT_CLI_UTIL_HPP

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fsplit_test
{

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr discarded.
inline Run run_cli(const std::string &args)
{
    const std::string cmd = std::string("\"") + FSPLIT_CLI + "\" " + args + " 2>/dev/null";
    Run res;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return res;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

inline std::filesystem::path scratch_dir(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / ("fsplit_" + name);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string write_text(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
}

} // namespace fsplit_test

#endif
