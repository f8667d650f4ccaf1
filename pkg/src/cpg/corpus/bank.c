/* Toy bank ledger with accounts and transfers. */

struct Account {
    int id;
    int balance;
    int overdraft;
    struct Account *next;
};

struct Bank {
    struct Account *accounts;
    int next_id;
    int transfers;
    int failures;
};

void bank_init(struct Bank *bank) {
    bank->accounts = NULL;
    bank->next_id = 1;
    bank->transfers = 0;
    bank->failures = 0;
}

struct Account *bank_open(struct Bank *bank, int deposit, int overdraft) {
    struct Account *acc = malloc(24);
    if (acc == NULL) {
        return NULL;
    }
    acc->id = bank->next_id;
    acc->balance = deposit;
    acc->overdraft = overdraft;
    acc->next = bank->accounts;
    bank->accounts = acc;
    bank->next_id = bank->next_id + 1;
    return acc;
}

struct Account *bank_find(struct Bank *bank, int id) {
    struct Account *acc = bank->accounts;
    while (acc != NULL && acc->id != id) {
        acc = acc->next;
    }
    return acc;
}

int can_withdraw(struct Account *acc, int amount) {
    return acc->balance + acc->overdraft >= amount;
}

int withdraw(struct Account *acc, int amount) {
    if (amount <= 0) {
        return 0;
    }
    if (!can_withdraw(acc, amount)) {
        return 0;
    }
    acc->balance = acc->balance - amount;
    return 1;
}

int deposit(struct Account *acc, int amount) {
    if (amount <= 0) {
        return 0;
    }
    acc->balance = acc->balance + amount;
    return 1;
}

int transfer(struct Bank *bank, int from, int to, int amount) {
    struct Account *src = bank_find(bank, from);
    struct Account *dst = bank_find(bank, to);
    if (src == NULL || dst == NULL || src == dst) {
        bank->failures = bank->failures + 1;
        return 0;
    }
    if (!withdraw(src, amount)) {
        bank->failures = bank->failures + 1;
        return 0;
    }
    deposit(dst, amount);
    bank->transfers = bank->transfers + 1;
    return 1;
}

int total_assets(struct Bank *bank) {
    int total = 0;
    struct Account *acc;
    for (acc = bank->accounts; acc != NULL; acc = acc->next) {
        total = total + acc->balance;
    }
    return total;
}

int accounts_in_debt(struct Bank *bank) {
    int debtors = 0;
    struct Account *acc = bank->accounts;
    while (acc != NULL) {
        if (acc->balance < 0) {
            debtors = debtors + 1;
        }
        acc = acc->next;
    }
    return debtors;
}

int apply_interest(struct Bank *bank, int percent) {
    struct Account *acc = bank->accounts;
    int paid = 0;
    int interest;
    while (acc != NULL) {
        if (acc->balance > 0) {
            interest = acc->balance * percent / 100;
            acc->balance = acc->balance + interest;
            paid = paid + interest;
        }
        acc = acc->next;
    }
    return paid;
}
