#include "tsigma/cli.hpp"

int main(int argc, char** argv) { return tsigma::cli_main(argc, argv); }
