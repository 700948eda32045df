#include "dido_cli.hpp"

int main(int argc, char** argv) { return dido::cli::run(argc, argv); }
