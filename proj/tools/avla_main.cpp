#include "avla/cli.hpp"

int main(int argc, char** argv) { return avla::cli::dispatch(argc, argv); }
