int kitchen_sink(int* xs, int n, int mode) {
    int total = 0;
    int i = 0;
    if (n <= 0)
        return 0;
    do {
        switch (mode) {
            case 0:
                total += xs[i];
                break;
            case 1:
                if (xs[i] > 0)
                    total++;
                break;
            default:
                for (;;) {
                    if (total > 100)
                        break;
                    total += 2;
                }
                break;
        }
        i++;
    } while (i < n);
    while (total % 3 != 0)
        total--;
    return total;
}
