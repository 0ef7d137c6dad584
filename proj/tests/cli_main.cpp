#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <string>

#include "support/cli_context.hpp"

std::string g_cli_path;
std::string g_data_dir;

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <data-dir> [doctest args...]\n", argv[0]);
        return 1;
    }
    g_cli_path = argv[1];
    g_data_dir = argv[2];

    doctest::Context context;
    context.applyCommandLine(argc - 2, argv + 2);
    return context.run();
}
