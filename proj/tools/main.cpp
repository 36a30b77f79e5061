// main.cpp -- thin entry point over the library CLI

#include "randfib/cli.hpp"

int main(int argc, char** argv) { return randfib::run_cli(argc, argv); }
