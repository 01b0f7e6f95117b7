#include "hexafield/cli.hpp"

int main(int argc, char** argv) { return hexafield::cli::run(argc, argv); }
