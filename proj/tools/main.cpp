#include "cyl7/cli.hpp"

int main(int argc, char** argv) {
    return cyl7::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
