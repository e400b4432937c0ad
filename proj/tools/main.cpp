#include "lcpinfer/cli.hpp"

int main(int argc, char** argv) { return lcpinfer::cli::run(argc, argv); }
