#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "cli/cli.hpp"

namespace {

extern "C" void on_interrupt(int) { carlitz::cli::request_stop(); }

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, on_interrupt);
    std::signal(SIGTERM, on_interrupt);
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    return carlitz::cli::run_cli(args, std::cout, std::cerr);
}
