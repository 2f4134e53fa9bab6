#include "ocring/cli.hpp"

int main(int argc, char** argv) { return ocring::cli_main(argc, argv); }
