#include "goldbug/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    goldbug::cli::Environment env;
    if (const char* path = std::getenv("GOLDBUG_CONFIG")) env.config_path = path;
    return goldbug::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr, env);
}
