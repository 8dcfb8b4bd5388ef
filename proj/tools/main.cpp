#include "reccf/cli.hpp"

int main(int argc, char** argv) {
    return reccf::run_cli(argc, argv);
}
