#include "romankit/cli.hpp"

int main(int argc, char** argv) { return romankit::run_cli(argc, argv); }
