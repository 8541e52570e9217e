void run(int mode, int n) {
    switch (mode) {
        case 1: {
            int i;
            for (i = 0; i < n; i++)
                step();
            break;
        }
        default:
            idle();
            break;
    }
}
