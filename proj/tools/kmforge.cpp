#include "kmforge/cli.hpp"

int main(int argc, char** argv) { return kmforge::run_cli(argc, argv); }
