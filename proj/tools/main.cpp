#include "charkit/cli.hpp"

int main(int argc, char** argv) { return charkit::cli_main(argc, argv); }
