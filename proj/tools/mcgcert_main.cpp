#include "mcgcert/cli.hpp"

int main(int argc, char** argv) { return mcgcert::run_cli(argc, argv); }
