// Placeholder entry point; the CLI is assembled once the solver modules land.
int main() { return 0; }
