#include "cowordism/cli.hpp"

int main(int argc, char** argv) { return cow::run_cli(argc, argv); }
