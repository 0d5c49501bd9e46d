#include "planarflow/cli.hpp"

int main(int argc, char** argv) { return planarflow::run_cli(argc, argv); }
