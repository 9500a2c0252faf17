#include "weylpsi/cli.hpp"

int main(int argc, char** argv)
{
    return weylpsi::run(argc, argv);
}
